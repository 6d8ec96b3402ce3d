/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/operators.hpp"

#include <stdexcept>

namespace noisegate {

cxd hs_inner(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("hs_inner: dimension mismatch");
  }
  return (x.adjoint() * y).trace();
}

const std::array<Mat, 4>& pauli_basis() {
  static const std::array<Mat, 4> paulis = [] {
    std::array<Mat, 4> p;
    const cxd i(0.0, 1.0);
    p[0] = Mat::Identity(2, 2);
    p[1] = Mat::Zero(2, 2);
    p[1] << 0, 1, 1, 0;
    p[2] = Mat::Zero(2, 2);
    p[2] << 0, -i, i, 0;
    p[3] = Mat::Zero(2, 2);
    p[3] << 1, 0, 0, -1;
    return p;
  }();
  return paulis;
}

std::vector<Mat> orthonormal_operator_basis(int d) {
  if (d < 2) {
    throw std::invalid_argument("orthonormal_operator_basis: d must be >= 2");
  }
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Mat e = Mat::Zero(d, d);
      e(i, j) = 1.0;
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

Mat tensor(const Mat& x, const Mat& y) {
  Mat out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return out;
}

namespace {

void require_bipartite(const Mat& x, int dim_a, int dim_b, int subsystem) {
  if (dim_a < 1 || dim_b < 1 ||
      x.rows() != static_cast<Eigen::Index>(dim_a) * dim_b ||
      x.cols() != x.rows()) {
    throw std::invalid_argument("bipartite operator has incompatible dims");
  }
  if (subsystem != 0 && subsystem != 1) {
    throw std::invalid_argument("subsystem index must be 0 or 1");
  }
}

}  // namespace

Mat partial_transpose(const Mat& x, int dim_a, int dim_b, int subsystem) {
  require_bipartite(x, dim_a, dim_b, subsystem);
  Mat out(x.rows(), x.cols());
  for (int a = 0; a < dim_a; ++a) {
    for (int b = 0; b < dim_b; ++b) {
      for (int ap = 0; ap < dim_a; ++ap) {
        for (int bp = 0; bp < dim_b; ++bp) {
          const int row = a * dim_b + b;
          const int col = ap * dim_b + bp;
          const int src = (subsystem == 0) ? ap * dim_b + b : a * dim_b + bp;
          const int dst = (subsystem == 0) ? a * dim_b + bp : ap * dim_b + b;
          out(row, col) = x(src, dst);
        }
      }
    }
  }
  return out;
}

Mat partial_trace(const Mat& x, int dim_a, int dim_b, int subsystem) {
  require_bipartite(x, dim_a, dim_b, subsystem);
  if (subsystem == 0) {
    Mat out = Mat::Zero(dim_b, dim_b);
    for (int a = 0; a < dim_a; ++a) {
      out += x.block(a * dim_b, a * dim_b, dim_b, dim_b);
    }
    return out;
  }
  Mat out = Mat::Zero(dim_a, dim_a);
  for (int a = 0; a < dim_a; ++a) {
    for (int ap = 0; ap < dim_a; ++ap) {
      cxd sum = 0.0;
      for (int b = 0; b < dim_b; ++b) {
        sum += x(a * dim_b + b, ap * dim_b + b);
      }
      out(a, ap) = sum;
    }
  }
  return out;
}

bool is_hermitian(const Mat& x, double tol) {
  if (x.rows() != x.cols()) return false;
  return (x - x.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Eigen::VectorXd hermitian_eigenvalues(const Mat& x, double tol) {
  if (!is_hermitian(x, tol)) {
    throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(x, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double min_eigenvalue(const Mat& x) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(x, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityOperator::DensityOperator(Mat m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw std::invalid_argument("DensityOperator: matrix must be square");
  }
  if (!is_hermitian(m_, tol)) {
    throw std::invalid_argument("DensityOperator: not Hermitian");
  }
  if (std::abs(m_.trace().real() - 1.0) > tol ||
      std::abs(m_.trace().imag()) > tol) {
    throw std::invalid_argument("DensityOperator: trace != 1");
  }
  if (min_eigenvalue(m_) < -tol) {
    throw std::invalid_argument("DensityOperator: negative eigenvalue");
  }
}

PureState::PureState(Vec amplitudes, double tol) : v_(std::move(amplitudes)) {
  if (v_.size() < 1) {
    throw std::invalid_argument("PureState: empty amplitude vector");
  }
  if (std::abs(v_.norm() - 1.0) > tol) {
    throw std::invalid_argument("PureState: norm != 1");
  }
}

}  // namespace noisegate
