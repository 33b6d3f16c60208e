#pragma once

#include <vector>

#include <Eigen/Core>

#include "getzler/even_form.hpp"
#include "getzler/power_series.hpp"

namespace getzler {

/// Square matrix with EvenForm entries: the carrier for curvature matrices
/// R_x and for analytic matrix functions over the nilpotent ring.  The
/// matrix size is independent of the form dimension (curvature matrices are
/// n x n, ad matrices are n(n-1)/2 x n(n-1)/2).
class FormMatrix {
 public:
  FormMatrix(int form_dimension, int size);

  static FormMatrix identity(int form_dimension, int size);
  static FormMatrix from_real(int form_dimension, const Eigen::MatrixXd& body);

  int form_dimension() const { return form_dim_; }
  int size() const { return size_; }

  const EvenForm& at(int r, int c) const { return e_[r * size_ + c]; }
  EvenForm& at(int r, int c) { return e_[r * size_ + c]; }

  /// Degree-0 part as a real matrix.
  Eigen::MatrixXd body() const;
  FormMatrix nilpotent_part() const;

  FormMatrix operator+(const FormMatrix& o) const;
  FormMatrix operator-(const FormMatrix& o) const;
  FormMatrix operator*(const FormMatrix& o) const;
  FormMatrix operator*(double s) const;
  FormMatrix scale(const EvenForm& s) const;
  FormMatrix transpose() const;

  EvenForm trace() const;
  double norm_inf() const;
  bool is_zero(double tol = 0.0) const;

 private:
  int form_dim_;
  int size_;
  std::vector<EvenForm> e_;
};

/// f(M) over the even-form ring.  With a pure nilpotent argument the series
/// truncates exactly at the nilpotency order; with a real argument it is the
/// ordinary matrix function; general bodies are handled by recentering the
/// series at the mean body eigenvalue, which must stay inside f's radius.
FormMatrix analytic_apply(const PowerSeries& f, const FormMatrix& M);

/// Ordinary real matrix function by the same series, with a spectral-radius
/// check against f's convergence radius.
Eigen::MatrixXd analytic_apply(const PowerSeries& f, const Eigen::MatrixXd& M);

/// det^{1/2}(M) = exp((1/2) tr log M), evaluated as
/// sqrt(det body) * exp((1/2) tr log(I + body^{-1} N)) where N is the
/// nilpotent part; the trace-log series is exact.  Requires a symmetric
/// positive-definite body.
EvenForm det_sqrt(const FormMatrix& M);

/// Full determinant via LU over the ring (pivoting on bodies).
EvenForm det_form(const FormMatrix& M);

/// Leibniz-expansion determinant (independent route, used by oracles/tests).
EvenForm det_leibniz(const FormMatrix& M);

/// Inverse over the ring via Gauss-Jordan with body pivoting.
FormMatrix form_inverse(const FormMatrix& M);

/// <v, M v> over the ring with a real vector.
EvenForm form_quad(const Eigen::VectorXd& v, const FormMatrix& M);

}  // namespace getzler
