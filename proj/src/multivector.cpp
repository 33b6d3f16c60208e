#include "getzler/multivector.hpp"

#include <cmath>
#include <stdexcept>

namespace getzler {

namespace {

void check_dimension(int n) {
  if (n < 2 || n > 16 || n % 2 != 0) {
    throw std::invalid_argument("dimension must be a positive even integer in [2,16]");
  }
}

}  // namespace

int merge_sign(Blade a, Blade b) {
  int swaps = 0;
  Blade rest = b;
  while (rest) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

Multivector::Multivector(int dimension) : n_(dimension) {
  check_dimension(dimension);
  c_.assign(std::size_t{1} << n_, Complex{0.0, 0.0});
}

Multivector Multivector::scalar(int dimension, Complex value) {
  Multivector m(dimension);
  m.c_[0] = value;
  return m;
}

Multivector Multivector::blade(int dimension, Blade mask, Complex value) {
  Multivector m(dimension);
  if (mask >= (Blade{1} << dimension)) {
    throw std::invalid_argument("blade mask out of range for dimension");
  }
  m.c_[mask] = value;
  return m;
}

Multivector Multivector::basis_one_form(int dimension, int index) {
  if (index < 1 || index > dimension) {
    throw std::invalid_argument("basis one-form index out of range");
  }
  return blade(dimension, Blade{1} << (index - 1));
}

Multivector Multivector::grade_project(int k) const {
  Multivector out(n_);
  for (Blade m = 0; m < c_.size(); ++m) {
    if (blade_grade(m) == k) out.c_[m] = c_[m];
  }
  return out;
}

bool Multivector::is_zero(double tol) const {
  for (const auto& v : c_) {
    if (std::abs(v) > tol) return false;
  }
  return true;
}

double Multivector::norm_inf() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

Multivector Multivector::operator+(const Multivector& o) const {
  require_same_dimension(*this, o);
  Multivector out(n_);
  for (std::size_t m = 0; m < c_.size(); ++m) out.c_[m] = c_[m] + o.c_[m];
  return out;
}

Multivector Multivector::operator-(const Multivector& o) const {
  require_same_dimension(*this, o);
  Multivector out(n_);
  for (std::size_t m = 0; m < c_.size(); ++m) out.c_[m] = c_[m] - o.c_[m];
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(n_);
  for (std::size_t m = 0; m < c_.size(); ++m) out.c_[m] = -c_[m];
  return out;
}

Multivector Multivector::operator*(Complex s) const {
  Multivector out(n_);
  for (std::size_t m = 0; m < c_.size(); ++m) out.c_[m] = c_[m] * s;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same_dimension(*this, o);
  for (std::size_t m = 0; m < c_.size(); ++m) c_[m] += o.c_[m];
  return *this;
}

void require_same_dimension(const Multivector& a, const Multivector& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("multivector dimension mismatch");
  }
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  require_same_dimension(a, b);
  Multivector out(a.dimension());
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (Blade ma = 0; ma < ac.size(); ++ma) {
    const Complex va = ac[ma];
    if (va == Complex{}) continue;
    for (Blade mb = 0; mb < bc.size(); ++mb) {
      const Complex vb = bc[mb];
      if (vb == Complex{}) continue;
      if (ma & mb) continue;  // repeated index
      out.add_coeff(ma | mb, va * vb * static_cast<double>(merge_sign(ma, mb)));
    }
  }
  return out;
}

Multivector interior(const Eigen::VectorXd& v, const Multivector& a) {
  if (v.size() != a.dimension()) {
    throw std::invalid_argument("vector/multivector dimension mismatch");
  }
  Multivector out(a.dimension());
  const auto& ac = a.coefficients();
  for (Blade m = 0; m < ac.size(); ++m) {
    const Complex val = ac[m];
    if (val == Complex{}) continue;
    Blade rest = m;
    while (rest) {
      const int k = std::countr_zero(rest);  // 0-based index
      rest &= rest - 1;
      const double vk = v(k);
      if (vk == 0.0) continue;
      // Position of k among the factors of the blade gives the sign.
      const int pos = std::popcount(m & ((Blade{1} << k) - 1));
      const double sign = (pos & 1) ? -1.0 : 1.0;
      out.add_coeff(m & ~(Blade{1} << k), val * vk * sign);
    }
  }
  return out;
}

Complex berezin(const Multivector& a) { return a.coeff(a.top_mask()); }

Multivector exp_wedge(const Multivector& a) {
  // Factor out the scalar part so the remaining series is nilpotent and
  // terminates within n/2 + 1 wedge powers.
  const Complex a0 = a.coeff(0);
  Multivector nil = a;
  nil.set_coeff(0, Complex{});
  Multivector acc = Multivector::scalar(a.dimension(), 1.0);
  Multivector term = Multivector::scalar(a.dimension(), 1.0);
  for (int k = 1; k <= a.dimension() + 1; ++k) {
    term = wedge(term, nil) * Complex(1.0 / k, 0.0);
    if (term.is_zero()) break;
    acc += term;
  }
  return acc * std::exp(a0);
}

Multivector delta_t(const Multivector& a, double t) {
  if (t <= 0.0) throw std::invalid_argument("delta_t requires t > 0");
  Multivector out(a.dimension());
  for (Blade m = 0; m < (Blade{1} << a.dimension()); ++m) {
    const Complex v = a.coeff(m);
    if (v == Complex{}) continue;
    out.set_coeff(m, v * std::pow(t, -0.5 * blade_grade(m)));
  }
  return out;
}

}  // namespace getzler
