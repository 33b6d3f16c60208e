#include "getzler/clifford.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace getzler {

namespace {

const std::vector<std::pair<int, int>>& pair_table(int n) {
  static const std::map<int, std::vector<std::pair<int, int>>> tables = [] {
    std::map<int, std::vector<std::pair<int, int>>> t;
    for (int n = 2; n <= 16; n += 2) {
      std::vector<std::pair<int, int>> p;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) p.emplace_back(i, j);
      t.emplace(n, std::move(p));
    }
    return t;
  }();
  return tables.at(n);
}

}  // namespace

SpinElement::SpinElement(int dimension)
    : n_(dimension), a_(Eigen::VectorXd::Zero(pair_count(dimension))) {}

SpinElement::SpinElement(int dimension, Eigen::VectorXd coeffs)
    : n_(dimension), a_(std::move(coeffs)) {
  if (a_.size() != pair_count(dimension)) {
    throw std::invalid_argument("SpinElement coefficient count mismatch");
  }
}

const std::vector<std::pair<int, int>>& SpinElement::pairs(int dimension) {
  return pair_table(dimension);
}

int SpinElement::pair_index(int i, int j, int dimension) {
  if (i < 1 || j <= i || j > dimension) {
    throw std::invalid_argument("SpinElement requires 1 <= i < j <= n");
  }
  // Lexicographic: pairs (1,2),(1,3),...,(1,n),(2,3),...
  return (i - 1) * dimension - (i * (i + 1)) / 2 + (j - 1);
}

SpinElement SpinElement::operator+(const SpinElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("SpinElement dimension mismatch");
  return SpinElement(n_, a_ + o.a_);
}

SpinElement SpinElement::operator*(double s) const { return SpinElement(n_, a_ * s); }

Multivector SpinElement::to_multivector() const {
  Multivector m(n_);
  const auto& ps = pairs(n_);
  for (std::size_t p = 0; p < ps.size(); ++p) {
    if (a_[static_cast<Eigen::Index>(p)] == 0.0) continue;
    const Blade mask = (Blade{1} << (ps[p].first - 1)) | (Blade{1} << (ps[p].second - 1));
    m.set_coeff(mask, Complex(a_[static_cast<Eigen::Index>(p)], 0.0));
  }
  return m;
}

SpinElement SpinElement::from_multivector(const Multivector& m, double tol) {
  SpinElement A(m.dimension());
  for (Blade mask = 0; mask < (Blade{1} << m.dimension()); ++mask) {
    const Complex v = m.coeff(mask);
    if (blade_grade(mask) == 2) {
      if (std::abs(v.imag()) > tol) {
        throw std::runtime_error("degree-2 part has imaginary content beyond tolerance");
      }
      const int i = std::countr_zero(mask) + 1;
      const int j = std::countr_zero(mask & (mask - 1)) + 1;
      A.set_coeff(i, j, v.real());
    } else if (std::abs(v) > tol) {
      throw std::runtime_error("multivector has content outside degree 2");
    }
  }
  return A;
}

Multivector apply_generator(int index, const Multivector& x) {
  const int n = x.dimension();
  if (index < 1 || index > n) throw std::invalid_argument("generator index out of range");
  const Blade bit = Blade{1} << (index - 1);
  Multivector out(n);
  const auto& xc = x.coefficients();
  for (Blade m = 0; m < xc.size(); ++m) {
    const Complex v = xc[m];
    if (v == Complex{}) continue;
    const int below = std::popcount(m & (bit - 1));
    const double sign = (below & 1) ? -1.0 : 1.0;
    if (m & bit) {
      // interior contraction, with the Clifford minus sign
      out.add_coeff(m & ~bit, -sign * v);
    } else {
      out.add_coeff(m | bit, sign * v);
    }
  }
  return out;
}

Multivector clifford_mul(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b);
  const int n = a.dimension();
  Multivector out(n);
  const auto& ac = a.coefficients();
  for (Blade m = 0; m < ac.size(); ++m) {
    const Complex va = ac[m];
    if (va == Complex{}) continue;
    // The blade word e^{i1} ... e^{ik} acts with its rightmost factor first.
    Multivector acted = b;
    Blade rest = m;
    while (rest) {
      const int top = 31 - std::countl_zero(rest);
      rest &= ~(Blade{1} << top);
      acted = apply_generator(top + 1, acted);
    }
    out += acted * va;
  }
  return out;
}

Multivector sigma(const Multivector& clifford_element) { return clifford_element; }

Multivector quantize(const Multivector& exterior_element) { return exterior_element; }

Multivector exp_clifford(const SpinElement& A, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("exp_clifford requires tol > 0");
  const Multivector a = A.to_multivector();
  Multivector acc = Multivector::scalar(A.dimension(), 1.0);
  Multivector term = acc;
  constexpr int kMaxTerms = 300;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = clifford_mul(a, term) * Complex(1.0 / k, 0.0);
    acc += term;
    if (term.norm_inf() < tol) return acc;
  }
  throw std::runtime_error("exp_clifford series did not converge within the iteration cap");
}

Eigen::MatrixXd tau(const SpinElement& A) {
  const int n = A.dimension();
  const Multivector a = A.to_multivector();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  const double scale = std::max(1.0, a.norm_inf());
  for (int k = 1; k <= n; ++k) {
    const Multivector ek = Multivector::basis_one_form(n, k);
    const Multivector comm = clifford_mul(a, ek) - clifford_mul(ek, a);
    for (Blade mask = 0; mask < (Blade{1} << n); ++mask) {
      const Complex v = comm.coeff(mask);
      if (blade_grade(mask) == 1) {
        M(std::countr_zero(mask), k - 1) = v.real();
        if (std::abs(v.imag()) > 1e-12 * scale) {
          throw std::runtime_error("tau: commutator has imaginary degree-1 components");
        }
      } else if (std::abs(v) > 1e-12 * scale) {
        throw std::runtime_error("tau: commutator has components outside degree 1");
      }
    }
  }
  return M;
}

double spin_inner(const SpinElement& A, const SpinElement& B) {
  if (A.dimension() != B.dimension()) {
    throw std::invalid_argument("SpinElement dimension mismatch");
  }
  return A.coefficients().dot(B.coefficients());
}

Eigen::MatrixXd ad_matrix(const SpinElement& A) {
  const int n = A.dimension();
  // Structure matrices C_p with ad_{b_p} b_q = sum_r (C_p)_{rq} b_r, built
  // once per dimension from Clifford commutators of the blade basis.
  static const std::map<int, std::vector<Eigen::MatrixXd>> cache = [] {
    std::map<int, std::vector<Eigen::MatrixXd>> c;
    for (int n = 2; n <= 8; n += 2) {
      const int D = SpinElement::pair_count(n);
      const auto& ps = SpinElement::pairs(n);
      std::vector<Eigen::MatrixXd> mats(D, Eigen::MatrixXd::Zero(D, D));
      for (int p = 0; p < D; ++p) {
        SpinElement bp(n);
        bp.set_coeff(ps[p].first, ps[p].second, 1.0);
        const Multivector mp = bp.to_multivector();
        for (int q = 0; q < D; ++q) {
          SpinElement bq(n);
          bq.set_coeff(ps[q].first, ps[q].second, 1.0);
          const Multivector mq = bq.to_multivector();
          const Multivector comm = clifford_mul(mp, mq) - clifford_mul(mq, mp);
          const SpinElement res = SpinElement::from_multivector(comm);
          for (int r = 0; r < D; ++r) mats[p](r, q) = res.coefficients()[r];
        }
      }
      c.emplace(n, std::move(mats));
    }
    return c;
  }();

  const auto& mats = cache.at(n);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(mats.size(), mats.size());
  for (std::size_t p = 0; p < mats.size(); ++p) {
    const double ap = A.coefficients()[static_cast<Eigen::Index>(p)];
    if (ap != 0.0) M += ap * mats[p];
  }
  return M;
}

Multivector chirality_element(int dimension) {
  static const Complex i_unit{0.0, 1.0};
  Complex phase = 1.0;
  for (int k = 0; k < dimension / 2; ++k) phase *= i_unit;
  Multivector m(dimension);
  m.set_coeff((Blade{1} << dimension) - 1, phase);
  return m;
}

}  // namespace getzler
