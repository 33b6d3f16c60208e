#include "getzler/riemann.hpp"

#include <cmath>
#include <stdexcept>

namespace getzler {

RiemannTensor::RiemannTensor(int dimension) : n_(dimension) {
  if (dimension < 2 || dimension > 8 || dimension % 2 != 0) {
    throw std::invalid_argument("RiemannTensor dimension must be even, 2 <= n <= 8");
  }
  r_.assign(static_cast<std::size_t>(n_) * n_ * n_ * n_, 0.0);
}

std::size_t RiemannTensor::idx(int i, int j, int k, int l) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_ || l < 1 || l > n_) {
    throw std::invalid_argument("RiemannTensor index out of range");
  }
  return (((static_cast<std::size_t>(i - 1) * n_) + (j - 1)) * n_ + (k - 1)) * n_ + (l - 1);
}

void RiemannTensor::validate(double tol) const {
  const auto& R = *this;
  double scale = 0.0;
  for (double v : r_) scale = std::max(scale, std::abs(v));
  const double bound = tol * std::max(1.0, scale);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = 1; k <= n_; ++k)
        for (int l = 1; l <= n_; ++l) {
          if (std::abs(R(i, j, k, l) + R(j, i, k, l)) > bound ||
              std::abs(R(i, j, k, l) + R(i, j, l, k)) > bound) {
            throw std::runtime_error("RiemannTensor: pair antisymmetry violated");
          }
          if (std::abs(R(i, j, k, l) - R(k, l, i, j)) > bound) {
            throw std::runtime_error("RiemannTensor: pair symmetry violated");
          }
          if (std::abs(R(i, j, k, l) + R(i, k, l, j) + R(i, l, j, k)) > bound) {
            throw std::runtime_error("RiemannTensor: first Bianchi identity violated");
          }
        }
}

RiemannTensor RiemannTensor::zero(int dimension) { return RiemannTensor(dimension); }

RiemannTensor RiemannTensor::single_blade(int dimension, int i, int j, double value) {
  RiemannTensor R(dimension);
  if (i == j) throw std::invalid_argument("single_blade requires i != j");
  R.set(i, j, i, j, value);
  R.set(j, i, i, j, -value);
  R.set(i, j, j, i, -value);
  R.set(j, i, j, i, value);
  return R;
}

RiemannTensor RiemannTensor::constant_curvature(int dimension, double kappa) {
  RiemannTensor R(dimension);
  for (int i = 1; i <= dimension; ++i)
    for (int j = 1; j <= dimension; ++j)
      for (int k = 1; k <= dimension; ++k)
        for (int l = 1; l <= dimension; ++l) {
          const double v = kappa * ((i == k && j == l ? 1.0 : 0.0) -
                                    (i == l && j == k ? 1.0 : 0.0));
          if (v != 0.0) R.set(i, j, k, l, v);
        }
  return R;
}

RiemannTensor RiemannTensor::random(int dimension, double magnitude, Rng& rng) {
  const int n = dimension;
  RiemannTensor raw(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) raw.set(i, j, k, l, rng.uniform(-magnitude, magnitude));

  // Project onto both pair antisymmetries and the pair symmetry.
  RiemannTensor sym(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const double anti =
              (raw(i, j, k, l) - raw(j, i, k, l) - raw(i, j, l, k) + raw(j, i, l, k)) / 4.0;
          const double anti_sw =
              (raw(k, l, i, j) - raw(l, k, i, j) - raw(k, l, j, i) + raw(l, k, j, i)) / 4.0;
          sym.set(i, j, k, l, (anti + anti_sw) / 2.0);
        }

  // Remove the totally antisymmetric part; what is left satisfies Bianchi.
  RiemannTensor out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const double b = (sym(i, j, k, l) + sym(i, k, l, j) + sym(i, l, j, k)) / 3.0;
          out.set(i, j, k, l, sym(i, j, k, l) - b);
        }
  out.validate();
  return out;
}

CurvatureMap::CurvatureMap(int dimension)
    : n_(dimension), entries_(static_cast<std::size_t>(dimension) * dimension,
                              SpinElement(dimension)) {}

const SpinElement& CurvatureMap::omega(int k, int l) const {
  if (k < 1 || k > n_ || l < 1 || l > n_) {
    throw std::invalid_argument("CurvatureMap index out of range");
  }
  return entries_[static_cast<std::size_t>(k - 1) * n_ + (l - 1)];
}

void CurvatureMap::set_omega(int k, int l, const SpinElement& value) {
  if (k < 1 || k > n_ || l < 1 || l > n_) {
    throw std::invalid_argument("CurvatureMap index out of range");
  }
  entries_[static_cast<std::size_t>(k - 1) * n_ + (l - 1)] = value;
}

CurvatureMap omega_from_riemann(const RiemannTensor& R) {
  R.validate();
  const int n = R.dimension();
  CurvatureMap Om(n);
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      SpinElement A(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const double v = kCurvatureNormalization * R(k, l, i, j);
          if (v != 0.0) A.set_coeff(i, j, v);
        }
      Om.set_omega(k, l, A);
    }
  }
  return Om;
}

Eigen::MatrixXd tau_a_omega(const SpinElement& A, const CurvatureMap& Om) {
  if (A.dimension() != Om.dimension()) {
    throw std::invalid_argument("tau_a_omega dimension mismatch");
  }
  const int n = A.dimension();
  Eigen::MatrixXd M(n, n);
  // <M e_k, e_l> = 2 <A, Omega(e_k, e_l)>, so row l, column k.
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) M(l - 1, k - 1) = 2.0 * spin_inner(A, Om.omega(k, l));
  return M;
}

FormMatrix riemann_form_matrix(const RiemannTensor& R) {
  const int n = R.dimension();
  FormMatrix M(n, n);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      EvenForm entry(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const double v = R(i, j, k, l);
          if (v != 0.0) entry += EvenForm::two_form(n, i, j, v);
        }
      M.at(k - 1, l - 1) = entry;
    }
  return M;
}

}  // namespace getzler
