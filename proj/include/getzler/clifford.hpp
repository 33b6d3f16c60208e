#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "getzler/multivector.hpp"

namespace getzler {

/// Element of spin(n) as real coefficients a_{ij} (1 <= i < j <= n) over the
/// blade basis e^i e^j, stored in lexicographic pair order.
class SpinElement {
 public:
  explicit SpinElement(int dimension);
  SpinElement(int dimension, Eigen::VectorXd coeffs);

  static int pair_count(int dimension) { return dimension * (dimension - 1) / 2; }
  static const std::vector<std::pair<int, int>>& pairs(int dimension);
  static int pair_index(int i, int j, int dimension);

  int dimension() const { return n_; }
  double coeff(int i, int j) const { return a_[pair_index(i, j, n_)]; }
  void set_coeff(int i, int j, double value) { a_[pair_index(i, j, n_)] = value; }

  const Eigen::VectorXd& coefficients() const { return a_; }
  double norm() const { return a_.norm(); }

  SpinElement operator+(const SpinElement& o) const;
  SpinElement operator*(double s) const;

  Multivector to_multivector() const;
  /// Degree-2 real part of a multivector as a spin(n) element.
  static SpinElement from_multivector(const Multivector& m, double tol = 1e-9);

 private:
  int n_;
  Eigen::VectorXd a_;
};

/// Clifford product through the symbol identification: both arguments and
/// the result are blade-basis multivectors, with the relation
/// e^i e^j + e^j e^i = -2 delta^{ij}.
Multivector clifford_mul(const Multivector& a, const Multivector& b);

/// Action of the generator e^index (1-based): wedge(e^i, x) - interior(e_i, x).
Multivector apply_generator(int index, const Multivector& x);

/// Symbol map and quantization.  Both are the identity on the shared
/// blade-basis representation; they exist to mark which algebra structure a
/// value is being read in.
Multivector sigma(const Multivector& clifford_element);
Multivector quantize(const Multivector& exterior_element);

/// Clifford exponential by direct series with norm cutoff.
Multivector exp_clifford(const SpinElement& A, double tol = 1e-13);

/// tau = D(Ad~): spin(n) -> so(n), computed as the Clifford commutator
/// action on degree-1 elements.  Column k holds [A, e^k].
Eigen::MatrixXd tau(const SpinElement& A);

/// Inner product making the blades e^i e^j orthonormal.
double spin_inner(const SpinElement& A, const SpinElement& B);

/// Matrix of ad_A on spin(n) in the orthonormal blade basis (size
/// pair_count x pair_count), assembled from cached basis commutators.
Eigen::MatrixXd ad_matrix(const SpinElement& A);

/// Structure matrices C_p with ad_A = sum_p a_p C_p, one per basis pair,
/// derived from Clifford commutators of the blade basis.
const std::vector<Eigen::MatrixXd>& ad_structure(int dimension);

/// i^{n/2} e^1 ... e^n, the complex volume element whose quantization
/// squares to +1.
Multivector chirality_element(int dimension);

}  // namespace getzler
