#include "getzler/power_series.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace getzler {

double PowerSeries::eval(double x) const {
  double acc = 0.0;
  for (int k = order() - 1; k >= 0; --k) acc = acc * x + c[k];
  return acc;
}

std::vector<double> PowerSeries::shifted(double x0) const {
  if (std::abs(x0) >= radius) {
    throw std::runtime_error("series '" + name + "' recentered outside its radius");
  }
  const int K = order();
  std::vector<double> out(K, 0.0);
  // out[k] = sum_{j>=k} c[j] * C(j,k) * x0^{j-k}
  for (int k = 0; k < K; ++k) {
    double binom = 1.0;  // C(j,k) built up incrementally over j
    double pow = 1.0;
    double acc = 0.0;
    for (int j = k; j < K; ++j) {
      acc += c[j] * binom * pow;
      pow *= x0;
      binom = binom * (j + 1) / (j + 1 - k);
    }
    out[k] = acc;
  }
  return out;
}

namespace series {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

}  // namespace

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t K = std::min(a.size(), b.size());
  std::vector<double> out(K, 0.0);
  for (std::size_t i = 0; i < K; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; i + j < K; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<double> reciprocal(const std::vector<double>& a) {
  if (a.empty() || a[0] == 0.0) throw std::invalid_argument("series reciprocal needs a[0] != 0");
  std::vector<double> out(a.size(), 0.0);
  out[0] = 1.0 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * out[k - j];
    out[k] = -s / a[0];
  }
  return out;
}

std::vector<double> log1p_of(const std::vector<double>& a) {
  if (a.empty() || a[0] != 1.0) throw std::invalid_argument("series log needs a[0] == 1");
  // log(a)' = a'/a, integrate term by term.
  std::vector<double> deriv(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) deriv[k - 1] = k * a[k];
  std::vector<double> inv = reciprocal(a);
  inv.resize(a.size() - 1);
  std::vector<double> d = mul(deriv, inv);
  std::vector<double> out(a.size(), 0.0);
  for (std::size_t k = 0; k < d.size(); ++k) out[k + 1] = d[k] / (k + 1);
  return out;
}

std::vector<double> exp_of(const std::vector<double>& a) {
  if (a.empty() || a[0] != 0.0) throw std::invalid_argument("series exp needs a[0] == 0");
  // exp(a)' = a' exp(a): e_{k+1} = (1/(k+1)) sum_j (j+1) a_{j+1} e_{k-j}
  std::vector<double> e(a.size(), 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += j * a[j] * e[k - j];
    e[k] = s / k;
  }
  return e;
}

std::vector<double> sqrt_of(const std::vector<double>& a) {
  if (a.empty() || a[0] != 1.0) throw std::invalid_argument("series sqrt needs a[0] == 1");
  std::vector<double> r(a.size(), 0.0);
  r[0] = 1.0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j < k; ++j) s += r[j] * r[k - j];
    r[k] = (a[k] - s) / 2.0;
  }
  return r;
}

PowerSeries exp(int order) {
  PowerSeries f{"exp", std::vector<double>(order), kInf};
  double fact = 1.0;
  for (int k = 0; k < order; ++k) {
    f.c[k] = 1.0 / fact;
    fact *= (k + 1);
  }
  return f;
}

PowerSeries sinhc(int order) {
  PowerSeries f{"sinhc", std::vector<double>(order, 0.0), kInf};
  double fact = 1.0;  // (2k+1)!
  for (int k = 0; 2 * k < order; ++k) {
    f.c[2 * k] = 1.0 / fact;
    fact *= (2 * k + 2) * (2 * k + 3);
  }
  return f;
}

PowerSeries coshx(int order) {
  PowerSeries f{"cosh", std::vector<double>(order, 0.0), kInf};
  double fact = 1.0;  // (2k)!
  for (int k = 0; 2 * k < order; ++k) {
    f.c[2 * k] = 1.0 / fact;
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  return f;
}

PowerSeries one_minus_exp_neg_over_x(int order) {
  PowerSeries f{"one_minus_exp_neg_over_x", std::vector<double>(order), kInf};
  double fact = 1.0;  // (k+1)!
  for (int k = 0; k < order; ++k) {
    fact *= (k + 1);
    f.c[k] = (k % 2 == 0 ? 1.0 : -1.0) / fact;
  }
  return f;
}

PowerSeries x_over_one_minus_exp_neg(int order) {
  PowerSeries base = one_minus_exp_neg_over_x(order);
  return PowerSeries{"x_over_one_minus_exp_neg", reciprocal(base.c), 2.0 * kPi};
}

PowerSeries tanhc(int order) {
  // tanh(x)/x = (sinh(x)/x) / cosh(x); nearest poles at +-i pi/2.
  PowerSeries s = sinhc(order);
  PowerSeries c = coshx(order);
  return PowerSeries{"tanhc", mul(s.c, reciprocal(c.c)), kPi / 2.0};
}

PowerSeries x_coth_x(int order) {
  PowerSeries s = sinhc(order);
  PowerSeries c = coshx(order);
  return PowerSeries{"x_coth_x", mul(c.c, reciprocal(s.c)), kPi};
}

PowerSeries sqrt1p(int order) {
  PowerSeries f{"sqrt1p", std::vector<double>(order), 1.0};
  f.c[0] = 1.0;
  for (int k = 1; k < order; ++k) {
    // C(1/2, k) = C(1/2, k-1) * (1/2 - (k-1)) / k
    f.c[k] = f.c[k - 1] * (0.5 - (k - 1)) / k;
  }
  return f;
}

PowerSeries log1p(int order) {
  PowerSeries f{"log1p", std::vector<double>(order, 0.0), 1.0};
  for (int k = 1; k < order; ++k) f.c[k] = (k % 2 == 1 ? 1.0 : -1.0) / k;
  return f;
}

PowerSeries log_sinhc(int order) {
  PowerSeries s = sinhc(order);
  return PowerSeries{"log_sinhc", log1p_of(s.c), kPi};
}

PowerSeries identity(int order) {
  PowerSeries f{"identity", std::vector<double>(order, 0.0), kInf};
  if (order > 1) f.c[1] = 1.0;
  return f;
}

const PowerSeries& lookup(std::string_view name) {
  static const std::map<std::string, PowerSeries, std::less<>> registry = [] {
    std::map<std::string, PowerSeries, std::less<>> r;
    for (const PowerSeries& f :
         {exp(), sinhc(), coshx(), one_minus_exp_neg_over_x(), x_over_one_minus_exp_neg(),
          tanhc(), x_coth_x(), sqrt1p(), log1p(), log_sinhc(), identity()}) {
      r.emplace(f.name, f);
    }
    return r;
  }();
  auto it = registry.find(name);
  if (it == registry.end()) {
    throw std::invalid_argument("unknown analytic primitive: " + std::string(name));
  }
  return it->second;
}

}  // namespace series

}  // namespace getzler
