#pragma once

#include <Eigen/Core>

#include "getzler/multivector.hpp"

namespace getzler {

/// Complex 2^{n/2} x 2^{n/2} matrix acting on the fermionic Fock space
/// Lambda C^{n/2}, rows/columns indexed by subsets of {1..n/2}.
using SpinorOperator = Eigen::MatrixXcd;

/// The spinor representation of Cl(R^n) built from creation/annihilation
/// operators on paired coordinates (2k-1, 2k).  Algebra map:
/// rho(clifford_mul(a,b)) = rho(a) rho(b).
SpinorOperator rho(const Multivector& a);

/// rho of a single blade, from the per-dimension cache.
const SpinorOperator& rho_blade(int dimension, Blade mask);

/// Inverse of rho composed with quantization: recovers the blade
/// coefficients by normalized Hilbert-Schmidt pairing.
Multivector clifford_from_matrix(const SpinorOperator& T, int dimension);

/// rho(quantize(i^{n/2} e^1...e^n)); squares to +I and is Hermitian.
SpinorOperator chirality(int dimension);

/// trace(chirality * T).
Complex supertrace(const SpinorOperator& T, int dimension);

/// (2/i)^{n/2}, the constant in the supertrace-Berezin identity.
Complex supertrace_constant(int dimension);

}  // namespace getzler
