#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace getzler {

/// Deterministic random source: mt19937_64 with an explicit Box-Muller
/// normal so results do not depend on the standard library's
/// normal_distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * std::generate_canonical<double, 53>(gen_);
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = std::generate_canonical<double, 53>(gen_);
    } while (u1 <= 0.0);
    const double u2 = std::generate_canonical<double, 53>(gen_);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace getzler
