#include "getzler/form_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace getzler {

namespace {

void require_compatible(const FormMatrix& a, const FormMatrix& b) {
  if (a.form_dimension() != b.form_dimension() || a.size() != b.size()) {
    throw std::invalid_argument("FormMatrix shape mismatch");
  }
}

void check_spectrum_in_radius(const Eigen::MatrixXd& body, double center, double radius,
                              const std::string& name) {
  if (!std::isfinite(radius)) return;
  if (body.rows() == 0) return;
  // Cheap sufficient bound first, exact eigenvalue check only when needed.
  const Eigen::MatrixXd shifted =
      body - center * Eigen::MatrixXd::Identity(body.rows(), body.cols());
  if (shifted.norm() < radius) return;
  Eigen::EigenSolver<Eigen::MatrixXd> es(shifted, /*computeEigenvectors=*/false);
  const double rho = es.eigenvalues().cwiseAbs().maxCoeff();
  if (rho >= radius) {
    throw std::runtime_error("matrix spectrum outside the convergence radius of '" + name + "'");
  }
}

}  // namespace

FormMatrix::FormMatrix(int form_dimension, int size)
    : form_dim_(form_dimension), size_(size), e_(size * size, EvenForm(form_dimension)) {
  if (size < 1) throw std::invalid_argument("FormMatrix size must be positive");
}

FormMatrix FormMatrix::identity(int form_dimension, int size) {
  FormMatrix M(form_dimension, size);
  for (int i = 0; i < size; ++i) M.at(i, i) = EvenForm::scalar(form_dimension, 1.0);
  return M;
}

FormMatrix FormMatrix::from_real(int form_dimension, const Eigen::MatrixXd& body) {
  if (body.rows() != body.cols()) throw std::invalid_argument("body must be square");
  FormMatrix M(form_dimension, static_cast<int>(body.rows()));
  for (int r = 0; r < M.size(); ++r)
    for (int c = 0; c < M.size(); ++c)
      if (body(r, c) != 0.0) M.at(r, c) = EvenForm::scalar(form_dimension, body(r, c));
  return M;
}

Eigen::MatrixXd FormMatrix::body() const {
  Eigen::MatrixXd B(size_, size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) B(r, c) = at(r, c).body();
  return B;
}

FormMatrix FormMatrix::nilpotent_part() const {
  FormMatrix M = *this;
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) M.at(r, c) = M.at(r, c).nilpotent_part();
  return M;
}

FormMatrix FormMatrix::operator+(const FormMatrix& o) const {
  require_compatible(*this, o);
  FormMatrix M = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) M.e_[i] += o.e_[i];
  return M;
}

FormMatrix FormMatrix::operator-(const FormMatrix& o) const {
  require_compatible(*this, o);
  FormMatrix M = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) M.e_[i] = M.e_[i] - o.e_[i];
  return M;
}

FormMatrix FormMatrix::operator*(const FormMatrix& o) const {
  require_compatible(*this, o);
  FormMatrix M(form_dim_, size_);
  for (int r = 0; r < size_; ++r) {
    for (int k = 0; k < size_; ++k) {
      const EvenForm& a = at(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < size_; ++c) {
        const EvenForm& b = o.at(k, c);
        if (b.is_zero()) continue;
        M.at(r, c) += a * b;
      }
    }
  }
  return M;
}

FormMatrix FormMatrix::operator*(double s) const {
  FormMatrix M = *this;
  for (auto& v : M.e_) v = v * s;
  return M;
}

FormMatrix FormMatrix::scale(const EvenForm& s) const {
  FormMatrix M = *this;
  for (auto& v : M.e_) v = v * s;
  return M;
}

FormMatrix FormMatrix::transpose() const {
  FormMatrix M(form_dim_, size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) M.at(c, r) = at(r, c);
  return M;
}

EvenForm FormMatrix::trace() const {
  EvenForm t(form_dim_);
  for (int i = 0; i < size_; ++i) t += at(i, i);
  return t;
}

double FormMatrix::norm_inf() const {
  double m = 0.0;
  for (const auto& v : e_) m = std::max(m, v.norm_inf());
  return m;
}

bool FormMatrix::is_zero(double tol) const {
  return std::all_of(e_.begin(), e_.end(), [tol](const EvenForm& v) { return v.is_zero(tol); });
}

FormMatrix analytic_apply(const PowerSeries& f, const FormMatrix& M) {
  const Eigen::MatrixXd B = M.body();
  const bool pure_nilpotent = (B.norm() == 0.0);
  double center = 0.0;
  std::vector<double> coeffs = f.c;
  if (!pure_nilpotent) {
    center = B.trace() / M.size();
    if (std::abs(center) < 1e-14) center = 0.0;
    if (center != 0.0) coeffs = f.shifted(center);
    check_spectrum_in_radius(B, center, f.radius, f.name);
  }

  FormMatrix shifted = M;
  if (center != 0.0) shifted = M - FormMatrix::identity(M.form_dimension(), M.size()) * center;

  FormMatrix acc = FormMatrix::identity(M.form_dimension(), M.size()) * coeffs[0];
  FormMatrix term = FormMatrix::identity(M.form_dimension(), M.size());
  int small_streak = 0;
  double prev_contrib = 0.0;
  double contrib = 0.0;
  for (int k = 1; k < static_cast<int>(coeffs.size()); ++k) {
    term = term * shifted;
    if (term.is_zero()) return acc;  // nilpotent series exhausted exactly
    if (coeffs[k] != 0.0) acc = acc + term * coeffs[k];
    prev_contrib = contrib;
    contrib = term.norm_inf() * std::abs(coeffs[k]);
    small_streak = (contrib < 1e-18 * std::max(1.0, acc.norm_inf())) ? small_streak + 1 : 0;
    if (small_streak >= 3) return acc;
  }
  if (std::max(contrib, prev_contrib) > 1e-11 * std::max(1.0, acc.norm_inf())) {
    throw std::runtime_error("analytic_apply: series for '" + f.name +
                             "' not converged at truncation order");
  }
  return acc;
}

Eigen::MatrixXd analytic_apply(const PowerSeries& f, const Eigen::MatrixXd& M) {
  check_spectrum_in_radius(M, 0.0, f.radius, f.name);
  const int n = static_cast<int>(M.rows());
  Eigen::MatrixXd acc = f.c[0] * Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  int small_streak = 0;
  double prev_contrib = 0.0;
  double contrib = 0.0;
  for (int k = 1; k < f.order(); ++k) {
    term = term * M;
    if (f.c[k] != 0.0) acc += f.c[k] * term;
    prev_contrib = contrib;
    contrib = std::abs(f.c[k]) * term.cwiseAbs().maxCoeff();
    small_streak = (contrib < 1e-18 * std::max(1.0, acc.cwiseAbs().maxCoeff()))
                       ? small_streak + 1
                       : 0;
    if (small_streak >= 3) return acc;
  }
  if (std::max(contrib, prev_contrib) > 1e-11 * std::max(1.0, acc.cwiseAbs().maxCoeff())) {
    throw std::runtime_error("analytic_apply: series for '" + f.name +
                             "' not converged at truncation order");
  }
  return acc;
}

EvenForm det_sqrt(const FormMatrix& M) {
  const Eigen::MatrixXd B = M.body();
  if ((B - B.transpose()).norm() > 1e-9 * std::max(1.0, B.norm())) {
    throw std::runtime_error("det_sqrt: body is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw std::runtime_error("det_sqrt: body is not positive definite");
  }
  double det_body = 1.0;
  for (int i = 0; i < B.rows(); ++i) det_body *= es.eigenvalues()(i);

  // X = body^{-1} N has nilpotent entries, so tr log(I + X) is a finite sum.
  const FormMatrix N = M.nilpotent_part();
  const Eigen::MatrixXd Binv = B.inverse();
  FormMatrix X(M.form_dimension(), M.size());
  for (int r = 0; r < M.size(); ++r)
    for (int c = 0; c < M.size(); ++c)
      for (int k = 0; k < M.size(); ++k)
        if (Binv(r, k) != 0.0) X.at(r, c) += N.at(k, c) * Binv(r, k);

  EvenForm tr_log(M.form_dimension());
  FormMatrix power = X;
  for (int k = 1; k <= M.form_dimension() / 2; ++k) {
    if (power.is_zero()) break;
    tr_log += power.trace() * ((k % 2 == 1 ? 1.0 : -1.0) / k);
    power = power * X;
  }
  return (tr_log * 0.5).exp() * std::sqrt(det_body);
}

EvenForm det_form(const FormMatrix& M) {
  // LU with partial pivoting on the bodies; division is exact in the ring.
  FormMatrix A = M;
  const int n = M.size();
  EvenForm det = EvenForm::scalar(M.form_dimension(), 1.0);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(A.at(r, col).body()) > std::abs(A.at(pivot, col).body())) pivot = r;
    }
    if (A.at(pivot, col).body() == 0.0) {
      throw std::runtime_error("det_form: singular body (no invertible pivot)");
    }
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(A.at(pivot, c), A.at(col, c));
      det = -det;
    }
    det = det * A.at(col, col);
    const EvenForm inv = A.at(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (A.at(r, col).is_zero()) continue;
      const EvenForm factor = A.at(r, col) * inv;
      for (int c = col; c < n; ++c) {
        A.at(r, c) = A.at(r, c) - factor * A.at(col, c);
      }
    }
  }
  return det;
}

EvenForm det_leibniz(const FormMatrix& M) {
  const int n = M.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EvenForm det(M.form_dimension());
  // Iterate permutations with their parity.
  std::vector<int> c(n, 0);
  int sign = 1;
  auto accumulate = [&]() {
    EvenForm prod = EvenForm::scalar(M.form_dimension(), static_cast<double>(sign));
    for (int i = 0; i < n; ++i) {
      prod = prod * M.at(i, perm[i]);
      if (prod.is_zero()) return;
    }
    det += prod;
  };
  accumulate();
  // Heap's algorithm; every swap flips the parity.
  int i = 1;
  while (i < n) {
    if (c[i] < i) {
      std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
      sign = -sign;
      accumulate();
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return det;
}

FormMatrix form_inverse(const FormMatrix& M) {
  const int n = M.size();
  FormMatrix A = M;
  FormMatrix inv = FormMatrix::identity(M.form_dimension(), n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(A.at(r, col).body()) > std::abs(A.at(pivot, col).body())) pivot = r;
    }
    if (A.at(pivot, col).body() == 0.0) {
      throw std::runtime_error("form_inverse: singular body (no invertible pivot)");
    }
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(A.at(pivot, c), A.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const EvenForm piv_inv = A.at(col, col).inverse();
    for (int c = 0; c < n; ++c) {
      A.at(col, c) = A.at(col, c) * piv_inv;
      inv.at(col, c) = inv.at(col, c) * piv_inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || A.at(r, col).is_zero()) continue;
      const EvenForm factor = A.at(r, col);
      for (int c = 0; c < n; ++c) {
        A.at(r, c) = A.at(r, c) - factor * A.at(col, c);
        inv.at(r, c) = inv.at(r, c) - factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

EvenForm form_quad(const Eigen::VectorXd& v, const FormMatrix& M) {
  if (v.size() != M.size()) throw std::invalid_argument("form_quad dimension mismatch");
  EvenForm q(M.form_dimension());
  for (int r = 0; r < M.size(); ++r) {
    if (v(r) == 0.0) continue;
    for (int c = 0; c < M.size(); ++c) {
      if (v(c) == 0.0 || M.at(r, c).is_zero()) continue;
      q += M.at(r, c) * (v(r) * v(c));
    }
  }
  return q;
}

}  // namespace getzler
