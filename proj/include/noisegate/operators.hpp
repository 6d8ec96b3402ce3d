/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_OPERATORS_HPP
#define NOISEGATE_OPERATORS_HPP

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace noisegate {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Default tolerance for invariant checks (Hermiticity, trace, positivity).
inline constexpr double kDefaultTol = 1e-9;

/// Hilbert-Schmidt inner product tr(x^dag y). Throws on dimension mismatch.
cxd hs_inner(const Mat& x, const Mat& y);

/// {sigma_0, sigma_1, sigma_2, sigma_3}; sigma_0 is the 2x2 identity.
const std::array<Mat, 4>& pauli_basis();

/// d^2 operators, pairwise orthonormal under hs_inner (matrix units).
/// Requires d >= 2.
std::vector<Mat> orthonormal_operator_basis(int d);

/// Kronecker product.
Mat tensor(const Mat& x, const Mat& y);

/// Transpose of one tensor factor of a (dim_a*dim_b)-dimensional operator.
/// subsystem 0 transposes the first factor, 1 the second.
Mat partial_transpose(const Mat& x, int dim_a, int dim_b, int subsystem);

/// Trace out one tensor factor; subsystem selects which factor is removed.
Mat partial_trace(const Mat& x, int dim_a, int dim_b, int subsystem);

/// Ascending real eigenvalues of a Hermitian operator.
/// Throws if x is not Hermitian within tol.
Eigen::VectorXd hermitian_eigenvalues(const Mat& x, double tol = kDefaultTol);

bool is_hermitian(const Mat& x, double tol = kDefaultTol);

/// Smallest eigenvalue of a Hermitian operator (no Hermiticity check).
double min_eigenvalue(const Mat& x);

/// A quantum state: Hermitian, positive semidefinite, unit trace (within tol).
class DensityOperator {
 public:
  explicit DensityOperator(Mat m, double tol = kDefaultTol);

  const Mat& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  Mat m_;
};

/// A unit-norm state vector.
class PureState {
 public:
  explicit PureState(Vec amplitudes, double tol = kDefaultTol);

  const Vec& amplitudes() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()); }
  Mat projector() const { return v_ * v_.adjoint(); }
  DensityOperator density() const { return DensityOperator(projector()); }

 private:
  Vec v_;
};

}  // namespace noisegate

#endif
