/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/protocols.hpp"

#include <stdexcept>

namespace noisegate {

namespace {

void check_sum_tp(const std::vector<CPMap>& branches, double tol,
                  const char* what) {
  const int din = branches.front().dim_in();
  Mat acc = Mat::Zero(din, din);
  for (const CPMap& b : branches) {
    if (b.dim_in() != din || b.dim_out() != branches.front().dim_out()) {
      throw std::invalid_argument(std::string(what) +
                                  ": branch dimension mismatch");
    }
    for (const Mat& k : b.kraus()) {
      acc.noalias() += k.adjoint() * k;
    }
  }
  if ((acc - Mat::Identity(din, din)).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument(std::string(what) +
                                ": branches do not sum to a TP map");
  }
}

}  // namespace

Instrument::Instrument(std::vector<CPMap> branches, double tol)
    : branches_(std::move(branches)) {
  if (branches_.empty()) {
    throw std::invalid_argument("Instrument: no branches");
  }
  check_sum_tp(branches_, tol, "Instrument");
}

const CPMap& Instrument::branch(int omega) const {
  if (omega < 1 || omega > outcomes()) {
    throw std::out_of_range("Instrument: outcome index out of range");
  }
  return branches_[static_cast<std::size_t>(omega - 1)];
}

Povm::Povm(std::vector<Mat> elements, double tol)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw std::invalid_argument("Povm: no elements");
  }
  const Eigen::Index d = elements_.front().rows();
  Mat acc = Mat::Zero(d, d);
  for (const Mat& m : elements_) {
    if (m.rows() != d || m.cols() != d) {
      throw std::invalid_argument("Povm: element dimension mismatch");
    }
    if (!is_hermitian(m, tol) || min_eigenvalue(m) < -tol) {
      throw std::invalid_argument("Povm: element not PSD");
    }
    acc += m;
  }
  if ((acc - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("Povm: elements do not sum to identity");
  }
}

const Mat& Povm::element(int omega) const {
  if (omega < 1 || omega > outcomes()) {
    throw std::out_of_range("Povm: outcome index out of range");
  }
  return elements_[static_cast<std::size_t>(omega - 1)];
}

Protocol::Protocol(std::vector<std::pair<CPMap, QuantumChannel>> pairs,
                   double tol)
    : pairs_(std::move(pairs)) {
  if (pairs_.empty()) {
    throw std::invalid_argument("Protocol: no outcome pairs");
  }
  std::vector<CPMap> branches;
  branches.reserve(pairs_.size());
  const int d = pairs_.front().first.dim_in();
  for (const auto& [branch, recovery] : pairs_) {
    if (!branch.is_square() || branch.dim_in() != d ||
        recovery.dim_in() != branch.dim_out() || !recovery.base().is_square()) {
      throw std::invalid_argument("Protocol: dimension mismatch");
    }
    branches.push_back(branch);
  }
  check_sum_tp(branches, tol, "Protocol");
}

const CPMap& Protocol::branch(int omega) const {
  if (omega < 1 || omega > outcomes()) {
    throw std::out_of_range("Protocol: outcome index out of range");
  }
  return pairs_[static_cast<std::size_t>(omega - 1)].first;
}

const QuantumChannel& Protocol::recovery(int omega) const {
  if (omega < 1 || omega > outcomes()) {
    throw std::out_of_range("Protocol: outcome index out of range");
  }
  return pairs_[static_cast<std::size_t>(omega - 1)].second;
}

Instrument Protocol::instrument() const {
  std::vector<CPMap> branches;
  branches.reserve(pairs_.size());
  for (const auto& [branch, recovery] : pairs_) branches.push_back(branch);
  return Instrument(std::move(branches));
}

double outcome_probability(const Instrument& inst, int omega,
                           const DensityOperator& rho) {
  return inst.branch(omega).apply(rho.matrix()).trace().real();
}

Povm induced_povm(const Instrument& inst) {
  std::vector<Mat> elements;
  elements.reserve(static_cast<std::size_t>(inst.outcomes()));
  const int d = inst.dim();
  for (const CPMap& branch : inst.branches()) {
    elements.push_back(dual(branch).apply(Mat::Identity(d, d)));
  }
  return Povm(std::move(elements));
}

QuantumChannel average_operation(const Protocol& p,
                                 const QuantumChannel& noise) {
  if (noise.dim_in() != p.dim() || noise.dim_out() != p.dim()) {
    throw std::invalid_argument("average_operation: dimension mismatch");
  }
  std::vector<Mat> kraus;
  for (const auto& [branch, recovery] : p.pairs()) {
    const CPMap stage = compose(recovery.base(), compose(noise.base(), branch));
    for (const Mat& k : stage.kraus()) kraus.push_back(k);
  }
  return QuantumChannel(CPMap(p.dim(), p.dim(), std::move(kraus)));
}

Protocol do_nothing(int d) {
  return Protocol(
      {{CPMap::identity(d), QuantumChannel(CPMap::identity(d))}});
}

Protocol no_measurement(int mu) {
  if (mu < 0 || mu > 3) {
    throw std::invalid_argument("no_measurement: mu must lie in 0..3");
  }
  const Mat& sigma = pauli_basis()[static_cast<std::size_t>(mu)];
  return Protocol(
      {{CPMap::identity(2), QuantumChannel(CPMap(2, 2, {sigma}))}});
}

Protocol discriminate_reprepare(const std::vector<PureState>& basis,
                                double tol) {
  const int d = static_cast<int>(basis.size());
  if (d < 2) {
    throw std::invalid_argument("discriminate_reprepare: need d >= 2 states");
  }
  for (int i = 0; i < d; ++i) {
    if (basis[static_cast<std::size_t>(i)].dim() != d) {
      throw std::invalid_argument(
          "discriminate_reprepare: basis size != dimension");
    }
    for (int j = 0; j < i; ++j) {
      const cxd overlap = basis[static_cast<std::size_t>(j)]
                              .amplitudes()
                              .dot(basis[static_cast<std::size_t>(i)].amplitudes());
      if (std::abs(overlap) > tol) {
        throw std::invalid_argument(
            "discriminate_reprepare: basis not orthonormal");
      }
    }
  }
  std::vector<std::pair<CPMap, QuantumChannel>> pairs;
  pairs.reserve(static_cast<std::size_t>(d));
  for (int omega = 0; omega < d; ++omega) {
    const Mat projector = basis[static_cast<std::size_t>(omega)].projector();
    // Constant repreparation of |phi_omega>: Kraus {|phi_omega><i|}_i.
    std::vector<Mat> reprepare;
    reprepare.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      Mat k = Mat::Zero(d, d);
      k.col(i) = basis[static_cast<std::size_t>(omega)].amplitudes();
      reprepare.push_back(std::move(k));
    }
    pairs.emplace_back(CPMap(d, d, {projector}),
                       QuantumChannel(CPMap(d, d, std::move(reprepare))));
  }
  return Protocol(std::move(pairs), tol);
}

Protocol discriminate_reprepare(int d) {
  std::vector<PureState> basis;
  basis.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    Vec v = Vec::Zero(d);
    v(i) = 1.0;
    basis.emplace_back(std::move(v));
  }
  return discriminate_reprepare(basis);
}

}  // namespace noisegate
