/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/separability.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "noisegate/geometry.hpp"

namespace noisegate {

std::string to_string(QcqStatus status) {
  switch (status) {
    case QcqStatus::entanglement_breaking:
      return "entanglement_breaking";
    case QcqStatus::not_eb:
      return "not_eb";
    case QcqStatus::undecided:
      return "undecided";
  }
  return "?";
}

std::pair<bool, double> ppt_check(const ChoiMatrix& choi, double tol) {
  const Mat pt = partial_transpose(choi.op, choi.dim_in, choi.dim_out, 0);
  const double min_eig = min_eigenvalue(pt);
  return {min_eig >= -tol, min_eig};
}

QcqVerdict is_qcq(const QuantumChannel& n, double tol) {
  if (!n.base().is_square()) {
    throw std::invalid_argument("is_qcq: square channels only");
  }
  const auto [ppt_ok, min_eig] = ppt_check(to_choi(n.base()), tol);
  QcqVerdict verdict;
  verdict.witness = min_eig;
  if (n.family().kind == NoiseFamilyKind::depolarizing) {
    const int d = n.family().d;
    const double threshold = static_cast<double>(d) / (d + 1.0);
    verdict.status = n.family().eps >= threshold - 1e-12
                         ? QcqStatus::entanglement_breaking
                         : QcqStatus::not_eb;
    return verdict;
  }
  if (n.dim() == 2) {
    verdict.status =
        ppt_ok ? QcqStatus::entanglement_breaking : QcqStatus::not_eb;
    return verdict;
  }
  verdict.status = ppt_ok ? QcqStatus::undecided : QcqStatus::not_eb;
  return verdict;
}

namespace {

// Takagi factorization tau = Q diag(lambda) Q^T of a complex symmetric
// matrix, lambda >= 0 descending, Q unitary. Computed through the real
// symmetric embedding [[Re, Im], [Im, -Re]] whose spectrum comes in +-lambda
// pairs; a positive-eigenvalue eigenvector (x; y) yields the column x + iy.
void takagi(const Mat& tau, Mat& q_out, Eigen::VectorXd& lambda_out) {
  const int n = static_cast<int>(tau.rows());
  Eigen::MatrixXd embed(2 * n, 2 * n);
  const Eigen::MatrixXd re = tau.real();
  const Eigen::MatrixXd im = tau.imag();
  embed.topLeftCorner(n, n) = re;
  embed.topRightCorner(n, n) = im;
  embed.bottomLeftCorner(n, n) = im;
  embed.bottomRightCorner(n, n) = -re;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(embed);
  const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  const double zero_tol = 1e-12 * scale;

  q_out.resize(n, n);
  lambda_out.resize(n);
  int col = 0;
  // Ascending spectrum: positive eigenvalues sit at the top, descending order
  // when walked backwards.
  for (int idx = 2 * n - 1; idx >= 0 && col < n; --idx) {
    const double eig = solver.eigenvalues()(idx);
    if (eig <= zero_tol) break;
    q_out.col(col) = solver.eigenvectors().col(idx).head(n) +
                     cxd(0.0, 1.0) * solver.eigenvectors().col(idx).tail(n);
    lambda_out(col) = eig;
    ++col;
  }
  // Kernel columns: complex Gram-Schmidt over the remaining eigenvectors.
  // Projection removes both earlier columns and the i*q partner of each
  // kernel vector, so every surviving direction appears exactly once.
  for (int idx = 0; idx < 2 * n && col < n; ++idx) {
    if (std::abs(solver.eigenvalues()(idx)) > zero_tol) continue;
    Vec candidate = solver.eigenvectors().col(idx).head(n) +
                    cxd(0.0, 1.0) * solver.eigenvectors().col(idx).tail(n);
    for (int j = 0; j < col; ++j) {
      candidate -= q_out.col(j).dot(candidate) * q_out.col(j);
    }
    const double norm = candidate.norm();
    if (norm < 1e-7) continue;
    q_out.col(col) = candidate / norm;
    lambda_out(col) = 0.0;
    ++col;
  }
  if (col != n) {
    throw std::logic_error("takagi: failed to assemble a unitary factor");
  }
}

// Phases phi with sum_j lambda_j e^{i phi_j} = 0 for descending lambda
// satisfying the polygon inequality lambda_1 <= lambda_2 + lambda_3 + ...
std::array<double, 4> closing_phases(const Eigen::Vector4d& lambda) {
  constexpr double kPi = 3.14159265358979323846;
  std::array<double, 4> phi{0.0, 0.0, 0.0, kPi};
  const double l = lambda(0) - lambda(3);
  if (l <= 1e-14) {
    // All four values coincide (sorted); opposite pairs cancel.
    return {0.0, kPi, 0.0, kPi};
  }
  if (lambda(1) <= 1e-14) {
    // Only lambda_1 remains: nothing can close the polygon; the caller
    // guards against this (it means nonzero concurrence).
    return phi;
  }
  // Triangle with sides (l, lambda_2, lambda_3).
  double cos_g2 =
      (l * l + lambda(1) * lambda(1) - lambda(2) * lambda(2)) /
      (2.0 * l * lambda(1));
  cos_g2 = std::clamp(cos_g2, -1.0, 1.0);
  const double g2 = std::acos(cos_g2);
  phi[1] = kPi - g2;
  const cxd residual = -cxd(l, 0.0) - lambda(1) * std::polar(1.0, phi[1]);
  phi[2] = lambda(2) > 1e-14 ? std::arg(residual) : 0.0;
  return phi;
}

struct ProductTerm {
  Vec a;     // normalized first-factor ket
  Vec b;     // normalized second-factor ket
  double p;  // weight
};

// Pure product-state decomposition of a separable (PPT) two-qubit state,
// rho = sum_i p_i |a_i b_i><a_i b_i|. Follows the zero-concurrence
// decomposition: diagonalize the spin-flip overlap matrix, pick phases that
// close the lambda polygon, and mix through a real Hadamard so every pure
// component has vanishing concurrence.
std::vector<ProductTerm> product_decomposition(const Mat& rho) {
  const Mat spin_flip = [] {
    const auto& sigma = pauli_basis();
    return tensor(sigma[2], sigma[2]);
  }();

  Eigen::SelfAdjointEigenSolver<Mat> solver(rho);
  std::vector<Vec> v;  // subnormalized eigenvectors, descending weight
  for (int idx = 3; idx >= 0; --idx) {
    const double mu = solver.eigenvalues()(idx);
    if (mu > 1e-13) {
      v.push_back(std::sqrt(mu) * solver.eigenvectors().col(idx));
    }
  }
  const int rank = static_cast<int>(v.size());
  if (rank == 0) return {};

  Mat tau(rank, rank);
  for (int i = 0; i < rank; ++i) {
    const Vec tilde = spin_flip * v[static_cast<std::size_t>(i)].conjugate();
    for (int j = 0; j < rank; ++j) {
      tau(j, i) = v[static_cast<std::size_t>(j)].dot(tilde);
    }
  }

  Mat q;
  Eigen::VectorXd lambda;
  takagi(tau, q, lambda);

  Eigen::Vector4d lam4 = Eigen::Vector4d::Zero();
  for (int i = 0; i < rank; ++i) lam4(i) = lambda(i);
  const double concurrence = lam4(0) - lam4(1) - lam4(2) - lam4(3);
  if (concurrence > 1e-7) {
    throw std::logic_error(
        "product_decomposition: state is not separable within tolerance");
  }
  const auto phi = closing_phases(lam4);

  // |x_i> = sum_j Q_ji |v_j>, then phase-rotate and Hadamard-mix.
  std::vector<Vec> x;
  x.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    Vec xi = Vec::Zero(4);
    for (int j = 0; j < rank; ++j) {
      xi += q(j, i) * v[static_cast<std::size_t>(j)];
    }
    x.push_back(std::polar(1.0, phi[static_cast<std::size_t>(i)] / 2.0) * xi);
  }

  constexpr double h = 0.5;
  const std::array<std::array<double, 4>, 4> hadamard = {{{h, h, h, h},
                                                          {h, h, -h, -h},
                                                          {h, -h, h, -h},
                                                          {h, -h, -h, h}}};
  std::vector<ProductTerm> terms;
  for (int i = 0; i < 4; ++i) {
    Vec z = Vec::Zero(4);
    for (int j = 0; j < rank; ++j) {
      z += hadamard[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
           x[static_cast<std::size_t>(j)];
    }
    const double weight = z.squaredNorm();
    if (weight < 1e-14) continue;
    Mat reshaped(2, 2);
    reshaped << z(0), z(1), z(2), z(3);
    Eigen::JacobiSVD<Mat> factor(reshaped,
                                 Eigen::ComputeFullU | Eigen::ComputeFullV);
    ProductTerm term;
    term.p = factor.singularValues()(0) * factor.singularValues()(0);
    term.a = factor.matrixU().col(0);
    term.b = factor.matrixV().col(0).conjugate();
    terms.push_back(std::move(term));
  }
  return terms;
}

std::optional<Eigen::Vector3d> pauli_diagonal_coordinates(
    const QuantumChannel& n) {
  if (!is_unital(n.base(), 1e-11)) return std::nullopt;
  const Eigen::Matrix3d b = bloch_matrix(n.base());
  Eigen::Matrix3d off = b;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > 1e-11) return std::nullopt;
  return Eigen::Vector3d(b.diagonal());
}

// Octahedron vertex mixture for a Pauli-diagonal qubit channel in O: the
// vertex +e_i measures sigma_i and reprepares the outcome projector, the
// vertex -e_i reprepares the flipped projector, and the leftover weight is
// spread evenly over all six vertices.
QcqDecomposition pauli_octahedron_decomposition(const Eigen::Vector3d& dvec) {
  const auto& sigma = pauli_basis();
  const Mat id2 = Mat::Identity(2, 2);
  const double slack = std::max(0.0, 1.0 - dvec.cwiseAbs().sum());
  std::vector<DensityOperator> states;
  std::vector<Mat> elements;
  for (int i = 0; i < 3; ++i) {
    const Mat p0 = 0.5 * (id2 + sigma[static_cast<std::size_t>(i + 1)]);
    const Mat p1 = 0.5 * (id2 - sigma[static_cast<std::size_t>(i + 1)]);
    const double w_plus = std::max(dvec(i), 0.0) + slack / 6.0;
    const double w_minus = std::max(-dvec(i), 0.0) + slack / 6.0;
    if (w_plus > 1e-15) {
      states.emplace_back(p0);
      elements.push_back(w_plus * p0);
      states.emplace_back(p1);
      elements.push_back(w_plus * p1);
    }
    if (w_minus > 1e-15) {
      states.emplace_back(p1);
      elements.push_back(w_minus * p0);
      states.emplace_back(p0);
      elements.push_back(w_minus * p1);
    }
  }
  return QcqDecomposition{std::move(states), Povm(std::move(elements))};
}

}  // namespace

std::optional<QcqDecomposition> qcq_decomposition(const QuantumChannel& n,
                                                  double tol) {
  if (n.dim_in() != 2 || n.dim_out() != 2) {
    throw std::invalid_argument("qcq_decomposition: qubit channels only");
  }
  const QcqVerdict verdict = is_qcq(n, tol);
  if (verdict.status != QcqStatus::entanglement_breaking) {
    return std::nullopt;
  }

  if (const auto dvec = pauli_diagonal_coordinates(n)) {
    return pauli_octahedron_decomposition(*dvec);
  }

  const auto terms = product_decomposition(to_choi(n.base()).op);
  std::vector<DensityOperator> states;
  std::vector<Mat> elements;
  for (const ProductTerm& term : terms) {
    // Choi product term |a><a| (x) p|b><b| corresponds to measuring
    // M = d p |conj(a)><conj(a)| and preparing |b><b|.
    states.emplace_back(term.b * term.b.adjoint());
    const Vec a_bar = term.a.conjugate();
    elements.push_back(2.0 * term.p * (a_bar * a_bar.adjoint()));
  }
  if (states.empty()) return std::nullopt;
  return QcqDecomposition{std::move(states), Povm(std::move(elements))};
}

QuantumChannel qcq_channel(const QcqDecomposition& decomposition, double tol) {
  std::vector<Mat> kraus;
  const int k = static_cast<int>(decomposition.states.size());
  if (k != decomposition.povm.outcomes()) {
    throw std::invalid_argument("qcq_channel: state/POVM count mismatch");
  }
  for (int idx = 0; idx < k; ++idx) {
    const Mat& rho = decomposition.states[static_cast<std::size_t>(idx)].matrix();
    const Mat& m = decomposition.povm.element(idx + 1);
    Eigen::SelfAdjointEigenSolver<Mat> rho_eig(rho);
    Eigen::SelfAdjointEigenSolver<Mat> m_eig(m);
    for (int a = 0; a < rho.rows(); ++a) {
      const double p = rho_eig.eigenvalues()(a);
      if (p < 1e-14) continue;
      for (int b = 0; b < m.rows(); ++b) {
        const double q = m_eig.eigenvalues()(b);
        if (q < 1e-14) continue;
        kraus.push_back(std::sqrt(p * q) * rho_eig.eigenvectors().col(a) *
                        m_eig.eigenvectors().col(b).adjoint());
      }
    }
  }
  return QuantumChannel(
      CPMap(static_cast<int>(decomposition.povm.element(1).rows()),
            static_cast<int>(decomposition.states.front().dim()),
            std::move(kraus)),
      tol);
}

}  // namespace noisegate
