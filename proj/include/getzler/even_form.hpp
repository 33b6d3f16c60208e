#pragma once

#include <vector>

#include "getzler/multivector.hpp"
#include "getzler/power_series.hpp"

namespace getzler {

/// Even-degree real multivector: a commutative ring whose positive-degree
/// part is nilpotent (order at most n/2 + 1).  This is the scalar ring for
/// Grassmann evaluation and for matrices of curvature 2-forms.
class EvenForm {
 public:
  explicit EvenForm(int dimension);

  static EvenForm scalar(int dimension, double value);
  /// value * e^i ^ e^j with 1-based i < j.
  static EvenForm two_form(int dimension, int i, int j, double value);

  int dimension() const { return n_; }
  double coeff(Blade mask) const { return c_[mask]; }
  void set_coeff(Blade mask, double value);

  /// Degree-0 part.
  double body() const { return c_[0]; }
  EvenForm nilpotent_part() const;
  double top() const { return c_[c_.size() - 1]; }

  EvenForm operator+(const EvenForm& o) const;
  EvenForm operator-(const EvenForm& o) const;
  EvenForm operator-() const;
  EvenForm operator*(const EvenForm& o) const;
  EvenForm operator*(double s) const;
  EvenForm& operator+=(const EvenForm& o);

  /// Multiplicative inverse; requires body() != 0 (the ring is local).
  EvenForm inverse() const;

  /// f(body + nu) = sum_k f^{(k)}(body)/k! nu^k, exact by nilpotency.
  EvenForm apply_series(const PowerSeries& f) const;

  /// Principal square root (body() > 0) and exponential, both exact.
  EvenForm sqrt() const;
  EvenForm exp() const;

  double norm_inf() const;
  bool is_zero(double tol = 0.0) const;
  double grade_part(int k, Blade mask) const = delete;

  Multivector to_multivector() const;
  /// Real even part of a multivector; throws if odd-degree or imaginary
  /// content exceeds tol.
  static EvenForm from_multivector(const Multivector& m, double tol = 1e-9);

  const std::vector<double>& coefficients() const { return c_; }

 private:
  int n_;
  std::vector<double> c_;
};

inline EvenForm operator*(double s, const EvenForm& a) { return a * s; }

}  // namespace getzler
