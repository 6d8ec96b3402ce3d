/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_SEPARABILITY_HPP
#define NOISEGATE_SEPARABILITY_HPP

#include <optional>

#include "noisegate/protocols.hpp"

namespace noisegate {

enum class QcqStatus { entanglement_breaking, not_eb, undecided };

std::string to_string(QcqStatus status);

struct QcqVerdict {
  QcqStatus status = QcqStatus::undecided;
  std::optional<double> witness;  // minimum partial-transpose eigenvalue
};

/// Partial-transposes the Choi state and reports (min eigenvalue >= -tol,
/// min eigenvalue). A negative result certifies entanglement in every
/// dimension; positivity is conclusive for qubit Choi states.
std::pair<bool, double> ppt_check(const ChoiMatrix& choi,
                                  double tol = kDefaultTol);

/// Entanglement-breaking certification. Decisive for qubit channels (PPT is
/// exact on 2x2 Choi states) and for the depolarizing family in any dimension
/// (threshold eps >= d/(d+1)); otherwise PPT failure certifies not_eb and PPT
/// success stays undecided.
QcqVerdict is_qcq(const QuantumChannel& n, double tol = kDefaultTol);

/// Measure-and-prepare form F(rho) = sum_k rho_k tr(M_k rho).
struct QcqDecomposition {
  std::vector<DensityOperator> states;
  Povm povm;
};

/// Constructs an explicit measure-and-prepare decomposition of a certified
/// entanglement-breaking qubit channel: octahedron vertex mixtures for
/// Pauli-diagonal channels, a product-state decomposition of the Choi state
/// otherwise. Returns nullopt when the channel is not certified EB.
std::optional<QcqDecomposition> qcq_decomposition(const QuantumChannel& n,
                                                  double tol = kDefaultTol);

/// Action of a measure-and-prepare pair, as a channel.
QuantumChannel qcq_channel(const QcqDecomposition& decomposition,
                           double tol = kDefaultTol);

}  // namespace noisegate

#endif
