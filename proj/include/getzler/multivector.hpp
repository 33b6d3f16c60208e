#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace getzler {

using Complex = std::complex<double>;

/// Bitmask encoding of an index subset of {1..n}: bit k-1 set means index k
/// is present.  The blade e^I is the wedge of the selected 1-forms in
/// increasing index order; that ordering is the canonical (sign = +1) form.
using Blade = std::uint32_t;

inline int blade_grade(Blade mask) { return std::popcount(mask); }

/// Sign of merging two disjoint sorted index sets into one sorted set,
/// i.e. the parity of the shuffle permutation in e^I wedge e^J.
int merge_sign(Blade a, Blade b);

/// Element of the complexified exterior algebra over R^n in the blade basis.
/// Doubles as a Clifford-algebra element through the symbol identification;
/// see clifford.hpp.  Values are immutable in spirit: all algebra operations
/// return fresh objects, and nothing here touches global state.
class Multivector {
 public:
  explicit Multivector(int dimension);

  static Multivector scalar(int dimension, Complex value);
  static Multivector blade(int dimension, Blade mask, Complex value = 1.0);
  /// e^index (1-based).
  static Multivector basis_one_form(int dimension, int index);

  int dimension() const { return n_; }
  Blade top_mask() const { return (Blade{1} << n_) - 1; }

  Complex coeff(Blade mask) const { return c_[mask]; }
  void set_coeff(Blade mask, Complex value) { c_[mask] = value; }
  void add_coeff(Blade mask, Complex value) { c_[mask] += value; }

  Multivector grade_project(int k) const;
  bool is_zero(double tol = 0.0) const;
  double norm_inf() const;

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator-() const;
  Multivector operator*(Complex s) const;
  Multivector& operator+=(const Multivector& o);

  const std::vector<Complex>& coefficients() const { return c_; }

 private:
  int n_;
  std::vector<Complex> c_;  // indexed by blade mask, size 2^n
};

inline Multivector operator*(Complex s, const Multivector& a) { return a * s; }

/// Exterior product.  Bilinear, associative, sign from shuffle parity.
Multivector wedge(const Multivector& a, const Multivector& b);

/// Interior product (contraction) with a vector in the orthonormal frame:
/// a graded derivation of degree -1 with interior(v, e^j) = v_j.
Multivector interior(const Eigen::VectorXd& v, const Multivector& a);

/// Coefficient of the top blade e^1 ^ ... ^ e^n.
Complex berezin(const Multivector& a);

/// Wedge exponential: sum of a^{wedge k} / k!.  Terminates once a power
/// vanishes, which always happens for positive-degree input.
Multivector exp_wedge(const Multivector& a);

/// Degree rescaling: multiplies the degree-j component by t^{-j/2}.
Multivector delta_t(const Multivector& a, double t);

void require_same_dimension(const Multivector& a, const Multivector& b);

}  // namespace getzler
