/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_FIDELITY_HPP
#define NOISEGATE_FIDELITY_HPP

#include <cstdint>

#include "noisegate/protocols.hpp"

namespace noisegate {

enum class FidelityMethod { formula, monte_carlo };

struct FidelityReport {
  double value = 0.0;
  FidelityMethod method = FidelityMethod::formula;
  long long n_samples = 0;  // 0 for the closed formula
  double std_error = 0.0;   // 0 for the closed formula
};

/// <psi| rho |psi>.
double pure_fidelity(const DensityOperator& rho, const PureState& psi);

/// Haar-average input-output fidelity of a channel,
/// (d + Tr_HS E) / (d (d+1)).
FidelityReport average_fidelity(const QuantumChannel& e);

/// Monte-Carlo estimate of the same Haar average over normalized
/// complex-Gaussian states. The sample budget is split into fixed-size chunks;
/// chunk c draws from seed + c, and chunk statistics are combined in index
/// order, so the result depends only on (n, seed), not on the thread count.
FidelityReport average_fidelity_mc(const QuantumChannel& e, long long n,
                                   std::uint64_t seed, int threads = 0);

/// average_fidelity of the protocol's average operation under the noise.
FidelityReport protocol_fidelity(const Protocol& p,
                                 const QuantumChannel& noise);

/// Pauli components of one outcome's maps against a dephasing axis i:
///   C_omega(1)       = 1 + a . sigma
///   C_omega(sigma_i) = b . sigma
///   I_omega^*(1)     = gamma + delta . sigma
///   I_omega^*(sigma_i) = epsilon + zeta . sigma
/// and the per-outcome trace f = gamma + a.delta + b.zeta.
struct OutcomeDecomposition {
  double gamma = 0.0;
  double epsilon = 0.0;
  Eigen::Vector3d delta = Eigen::Vector3d::Zero();
  Eigen::Vector3d zeta = Eigen::Vector3d::Zero();
  Eigen::Vector3d a = Eigen::Vector3d::Zero();
  Eigen::Vector3d b = Eigen::Vector3d::Zero();
  double f = 0.0;
};

struct AppendixDecomposition {
  std::vector<OutcomeDecomposition> outcomes;
  double f_total = 0.0;  // sum of f over outcomes; never exceeds 2
};

/// Per-outcome decomposition of Tr_HS C_omega o E_{0i} o I_omega for a qubit
/// protocol against the dephasing noise along axis i (1..3).
AppendixDecomposition appendix_decompose(const Protocol& p, int axis);

}  // namespace noisegate

#endif
