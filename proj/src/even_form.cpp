#include "getzler/even_form.hpp"

#include <cmath>
#include <stdexcept>

namespace getzler {

EvenForm::EvenForm(int dimension) : n_(dimension) {
  if (dimension < 2 || dimension > 16 || dimension % 2 != 0) {
    throw std::invalid_argument("dimension must be a positive even integer in [2,16]");
  }
  c_.assign(std::size_t{1} << n_, 0.0);
}

EvenForm EvenForm::scalar(int dimension, double value) {
  EvenForm f(dimension);
  f.c_[0] = value;
  return f;
}

EvenForm EvenForm::two_form(int dimension, int i, int j, double value) {
  if (i < 1 || j < 1 || i >= j || j > dimension) {
    throw std::invalid_argument("two_form requires 1 <= i < j <= n");
  }
  EvenForm f(dimension);
  f.c_[(Blade{1} << (i - 1)) | (Blade{1} << (j - 1))] = value;
  return f;
}

void EvenForm::set_coeff(Blade mask, double value) {
  if (blade_grade(mask) % 2 != 0) {
    throw std::invalid_argument("EvenForm keys must have even cardinality");
  }
  c_[mask] = value;
}

EvenForm EvenForm::nilpotent_part() const {
  EvenForm f = *this;
  f.c_[0] = 0.0;
  return f;
}

EvenForm EvenForm::operator+(const EvenForm& o) const {
  EvenForm f = *this;
  f += o;
  return f;
}

EvenForm EvenForm::operator-(const EvenForm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("EvenForm dimension mismatch");
  EvenForm f = *this;
  for (std::size_t m = 0; m < c_.size(); ++m) f.c_[m] -= o.c_[m];
  return f;
}

EvenForm EvenForm::operator-() const {
  EvenForm f = *this;
  for (auto& v : f.c_) v = -v;
  return f;
}

EvenForm& EvenForm::operator+=(const EvenForm& o) {
  if (n_ != o.n_) throw std::invalid_argument("EvenForm dimension mismatch");
  for (std::size_t m = 0; m < c_.size(); ++m) c_[m] += o.c_[m];
  return *this;
}

EvenForm EvenForm::operator*(const EvenForm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("EvenForm dimension mismatch");
  EvenForm out(n_);
  for (Blade ma = 0; ma < c_.size(); ++ma) {
    const double va = c_[ma];
    if (va == 0.0) continue;
    for (Blade mb = 0; mb < o.c_.size(); ++mb) {
      const double vb = o.c_[mb];
      if (vb == 0.0) continue;
      if (ma & mb) continue;
      out.c_[ma | mb] += va * vb * merge_sign(ma, mb);
    }
  }
  return out;
}

EvenForm EvenForm::operator*(double s) const {
  EvenForm f = *this;
  for (auto& v : f.c_) v *= s;
  return f;
}

EvenForm EvenForm::inverse() const {
  const double b = body();
  if (b == 0.0) throw std::runtime_error("EvenForm with zero body is not invertible");
  // (b + nu)^{-1} = b^{-1} sum_k (-nu/b)^k, finite by nilpotency.
  EvenForm x = nilpotent_part() * (-1.0 / b);
  EvenForm acc = EvenForm::scalar(n_, 1.0);
  EvenForm term = EvenForm::scalar(n_, 1.0);
  for (int k = 1; k <= n_ / 2; ++k) {
    term = term * x;
    if (term.is_zero()) break;
    acc += term;
  }
  return acc * (1.0 / b);
}

EvenForm EvenForm::apply_series(const PowerSeries& f) const {
  const double b = body();
  std::vector<double> coeffs;
  if (b == 0.0) {
    coeffs = f.c;
  } else {
    coeffs = f.shifted(b);
  }
  EvenForm nu = nilpotent_part();
  EvenForm acc = EvenForm::scalar(n_, coeffs.empty() ? 0.0 : coeffs[0]);
  EvenForm term = EvenForm::scalar(n_, 1.0);
  for (int k = 1; k <= n_ / 2 && k < static_cast<int>(coeffs.size()); ++k) {
    term = term * nu;
    if (term.is_zero()) break;
    acc += term * coeffs[k];
  }
  return acc;
}

EvenForm EvenForm::sqrt() const {
  const double b = body();
  if (b <= 0.0) throw std::runtime_error("EvenForm sqrt requires positive body");
  EvenForm u = nilpotent_part() * (1.0 / b);
  return u.apply_series(series::lookup("sqrt1p")) * std::sqrt(b);
}

EvenForm EvenForm::exp() const {
  EvenForm nu = nilpotent_part();
  EvenForm acc = EvenForm::scalar(n_, 1.0);
  EvenForm term = EvenForm::scalar(n_, 1.0);
  for (int k = 1; k <= n_ / 2; ++k) {
    term = term * nu * (1.0 / k);
    if (term.is_zero()) break;
    acc += term;
  }
  return acc * std::exp(body());
}

double EvenForm::norm_inf() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

bool EvenForm::is_zero(double tol) const {
  for (double v : c_) {
    if (std::abs(v) > tol) return false;
  }
  return true;
}

Multivector EvenForm::to_multivector() const {
  Multivector m(n_);
  for (Blade mask = 0; mask < c_.size(); ++mask) {
    if (c_[mask] != 0.0) m.set_coeff(mask, Complex(c_[mask], 0.0));
  }
  return m;
}

EvenForm EvenForm::from_multivector(const Multivector& m, double tol) {
  EvenForm f(m.dimension());
  for (Blade mask = 0; mask < (Blade{1} << m.dimension()); ++mask) {
    const Complex v = m.coeff(mask);
    if (blade_grade(mask) % 2 != 0) {
      if (std::abs(v) > tol) {
        throw std::runtime_error("multivector has odd-degree content beyond tolerance");
      }
      continue;
    }
    if (std::abs(v.imag()) > tol) {
      throw std::runtime_error("multivector has imaginary content beyond tolerance");
    }
    f.c_[mask] = v.real();
  }
  return f;
}

}  // namespace getzler
