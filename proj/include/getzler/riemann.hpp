#pragma once

#include <vector>

#include <Eigen/Core>

#include "getzler/clifford.hpp"
#include "getzler/form_matrix.hpp"
#include "getzler/rng.hpp"

namespace getzler {

/// Algebraic curvature tensor R_{ijkl} at a point, dense storage, 1-based
/// indices.  validate() enforces the pair antisymmetries, pair symmetry and
/// the first Bianchi identity.
class RiemannTensor {
 public:
  explicit RiemannTensor(int dimension);

  int dimension() const { return n_; }
  double operator()(int i, int j, int k, int l) const { return r_[idx(i, j, k, l)]; }
  void set(int i, int j, int k, int l, double value) { r_[idx(i, j, k, l)] = value; }

  void validate(double tol = 1e-10) const;

  static RiemannTensor zero(int dimension);
  /// R_{ijij} = value together with its symmetry orbit, all else zero.
  static RiemannTensor single_blade(int dimension, int i, int j, double value);
  /// R_{ijkl} = kappa (delta_ik delta_jl - delta_il delta_jk).
  static RiemannTensor constant_curvature(int dimension, double kappa);
  /// Random valid tensor: iid entries symmetrized and Bianchi-projected.
  static RiemannTensor random(int dimension, double magnitude, Rng& rng);

 private:
  std::size_t idx(int i, int j, int k, int l) const;
  int n_;
  std::vector<double> r_;
};

/// Curvature 2-form with values in spin(n): Omega(e_k, e_l) as a SpinElement,
/// antisymmetric in (k,l).
class CurvatureMap {
 public:
  explicit CurvatureMap(int dimension);

  int dimension() const { return n_; }
  const SpinElement& omega(int k, int l) const;  // 1-based
  void set_omega(int k, int l, const SpinElement& value);

 private:
  int n_;
  std::vector<SpinElement> entries_;  // row-major (k-1)*n + (l-1)
};

/// Curvature pairing normalization: Omega(e_k, e_l) = c * sum_{i<j} R_{klij}
/// e^i e^j with c = 1/2.  The value is forced by matching the Grassmann
/// evaluation of the horizontal Jacobian blocks at 2 e^e* against the
/// curvature matrix R_x; see docs/normalization.md for the derivation.
inline constexpr double kCurvatureNormalization = 0.5;

CurvatureMap omega_from_riemann(const RiemannTensor& R);

/// so(n) matrix of the pairing <M v, w> = 2 <A, Omega(v,w)>.
Eigen::MatrixXd tau_a_omega(const SpinElement& A, const CurvatureMap& Om);

/// (R_x)_{kl} = sum_{i<j} R_{ijkl} e^i ^ e^j as an antisymmetric FormMatrix.
FormMatrix riemann_form_matrix(const RiemannTensor& R);

}  // namespace getzler
