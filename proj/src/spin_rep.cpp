#include "getzler/spin_rep.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace getzler {

namespace {

// Creation/annihilation with the Jordan-Wigner sign (-1)^{#{j in S : j < k}},
// acting on Fock states indexed by mode subsets of {1..m}.
SpinorOperator creation(int m, int k) {
  const int dim = 1 << m;
  SpinorOperator M = SpinorOperator::Zero(dim, dim);
  const unsigned bit = 1u << (k - 1);
  for (unsigned s = 0; s < static_cast<unsigned>(dim); ++s) {
    if (s & bit) continue;
    const int below = std::popcount(s & (bit - 1));
    M(s | bit, s) = (below & 1) ? -1.0 : 1.0;
  }
  return M;
}

SpinorOperator annihilation(int m, int k) {
  const int dim = 1 << m;
  SpinorOperator M = SpinorOperator::Zero(dim, dim);
  const unsigned bit = 1u << (k - 1);
  for (unsigned s = 0; s < static_cast<unsigned>(dim); ++s) {
    if (!(s & bit)) continue;
    const int below = std::popcount(s & (bit - 1));
    M(s & ~bit, s) = (below & 1) ? -1.0 : 1.0;
  }
  return M;
}

struct RepTable {
  std::vector<SpinorOperator> blades;  // indexed by blade mask
};

const RepTable& rep_table(int n) {
  static const std::map<int, RepTable> cache = [] {
    std::map<int, RepTable> c;
    for (int n = 2; n <= 8; n += 2) {
      const int m = n / 2;
      const int dim = 1 << m;
      // Generators: rho(e^{2k-1}) = a_k^+ - a_k,  rho(e^{2k}) = i (a_k^+ + a_k).
      std::vector<SpinorOperator> gen(n);
      for (int k = 1; k <= m; ++k) {
        const SpinorOperator cr = creation(m, k);
        const SpinorOperator an = annihilation(m, k);
        gen[2 * k - 2] = cr - an;
        gen[2 * k - 1] = Complex(0.0, 1.0) * (cr + an);
      }
      RepTable t;
      t.blades.resize(std::size_t{1} << n);
      t.blades[0] = SpinorOperator::Identity(dim, dim);
      for (Blade mask = 1; mask < t.blades.size(); ++mask) {
        const int low = std::countr_zero(mask);
        // e^I = e^{low} * e^{I \ low}; the lowest factor multiplies on the left.
        t.blades[mask] = gen[low] * t.blades[mask & (mask - 1)];
      }
      c.emplace(n, std::move(t));
    }
    return c;
  }();
  auto it = cache.find(n);
  if (it == cache.end()) throw std::invalid_argument("spinor representation needs even n <= 8");
  return it->second;
}

}  // namespace

const SpinorOperator& rho_blade(int dimension, Blade mask) {
  return rep_table(dimension).blades.at(mask);
}

SpinorOperator rho(const Multivector& a) {
  const RepTable& t = rep_table(a.dimension());
  const int dim = 1 << (a.dimension() / 2);
  SpinorOperator M = SpinorOperator::Zero(dim, dim);
  for (Blade mask = 0; mask < t.blades.size(); ++mask) {
    const Complex v = a.coeff(mask);
    if (v != Complex{}) M += v * t.blades[mask];
  }
  return M;
}

Multivector clifford_from_matrix(const SpinorOperator& T, int dimension) {
  const RepTable& t = rep_table(dimension);
  const double norm = 1.0 / static_cast<double>(1 << (dimension / 2));
  Multivector out(dimension);
  for (Blade mask = 0; mask < t.blades.size(); ++mask) {
    const Complex c = (t.blades[mask].adjoint() * T).trace() * norm;
    if (c != Complex{}) out.set_coeff(mask, c);
  }
  return out;
}

SpinorOperator chirality(int dimension) {
  Complex phase = 1.0;
  for (int k = 0; k < dimension / 2; ++k) phase *= Complex(0.0, 1.0);
  return phase * rho_blade(dimension, (Blade{1} << dimension) - 1);
}

Complex supertrace(const SpinorOperator& T, int dimension) {
  return (chirality(dimension) * T).trace();
}

Complex supertrace_constant(int dimension) {
  Complex c = 1.0;
  for (int k = 0; k < dimension / 2; ++k) c *= Complex(0.0, -2.0);
  return c;
}

}  // namespace getzler
