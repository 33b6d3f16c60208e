#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace getzler {

/// A scalar analytic function given by its Taylor coefficients about 0,
/// together with the convergence radius.  These are the reference
/// expansions behind every analytic matrix/ring function in the library.
struct PowerSeries {
  std::string name;
  std::vector<double> c;  // c[k] = f^{(k)}(0) / k!
  double radius = 0.0;    // infinity() for entire functions

  int order() const { return static_cast<int>(c.size()); }
  double eval(double x) const;

  /// Taylor coefficients about a new center x0 (|x0| < radius):
  /// out[k] = f^{(k)}(x0)/k!, computed to the same order.
  std::vector<double> shifted(double x0) const;
};

namespace series {

// Coefficient-vector arithmetic, all truncated at the shorter length
// (or the length of `a` where only one operand).
std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> reciprocal(const std::vector<double>& a);   // requires a[0] != 0
std::vector<double> log1p_of(const std::vector<double>& a);     // log(a), a[0] = 1
std::vector<double> exp_of(const std::vector<double>& a);       // exp(a), a[0] = 0
std::vector<double> sqrt_of(const std::vector<double>& a);      // sqrt(a), a[0] = 1

PowerSeries exp(int order = 40);
PowerSeries sinhc(int order = 40);                    // sinh(x)/x
PowerSeries coshx(int order = 40);
PowerSeries one_minus_exp_neg_over_x(int order = 40); // (1 - e^{-x})/x
PowerSeries x_over_one_minus_exp_neg(int order = 40); // x/(1 - e^{-x})
PowerSeries tanhc(int order = 40);                    // tanh(x)/x
PowerSeries x_coth_x(int order = 40);
PowerSeries sqrt1p(int order = 40);                   // sqrt(1 + x)
PowerSeries log1p(int order = 40);
PowerSeries log_sinhc(int order = 40);                // log(sinh(x)/x)
PowerSeries identity(int order = 40);                 // f(x) = x

/// Registry of the named analytic primitives usable in composite
/// expression trees.  Throws std::invalid_argument for unknown names.
const PowerSeries& lookup(std::string_view name);

}  // namespace series

}  // namespace getzler
