/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_OPTIMIZER_HPP
#define NOISEGATE_OPTIMIZER_HPP

#include <cstdint>
#include <optional>

#include "noisegate/fidelity.hpp"

namespace noisegate {

struct OptimizerConfig {
  int n_outcomes = 2;
  int kraus_rank = 2;  // per branch and per recovery
  int restarts = 20;
  int max_iters = 2000;
  double step_init = 0.1;
  double grad_tol = 1e-10;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
};

struct RestartStats {
  double final_fbar = 0.0;
  int iters = 0;
  bool converged = false;
};

struct OptimizationResult {
  double best_fbar = 0.0;
  Protocol best_protocol;
  std::vector<RestartStats> per_restart;
  std::optional<double> gap_to_prediction;
};

/// Protocol sampled from Haar-random isometries: the instrument is a random
/// isometry from the input into outcome x rank x output space sliced into
/// branches, recoveries likewise per outcome. All constraint invariants hold
/// by construction; bit-identical for a fixed seed.
Protocol random_protocol(int d, const OptimizerConfig& cfg, std::uint64_t seed);

/// Average fidelity of the protocol against the noise; the quantity the
/// see-saw maximizes. Matches protocol_fidelity.
double objective(const Protocol& p, const QuantumChannel& noise);

/// Alternating projected-gradient ascent over the instrument and recovery
/// isometries (polar retraction after each step), best over restarts.
/// Restart i draws from seed + i and the reduction is by (fbar, restart
/// index), so the result does not depend on scheduling.
OptimizationResult optimize(const QuantumChannel& noise,
                            const OptimizerConfig& cfg);

struct CertificationReport {
  bool has_prediction = false;
  double predicted = 0.0;
  double gap = 0.0;      // predicted - best_fbar
  bool violated = false;  // best_fbar > predicted + 1e-9
  bool exploratory = false;
  double fbar_do_nothing = 0.0;
  double fbar_dr = 0.0;
  double fbar_no_measurement_best = 0.0;  // qubit only; else = do_nothing
};

/// Compares the optimizer's lower bound against the theoretical optimum when
/// one is known; reports classical baselines either way.
CertificationReport certify_upper_bound(const QuantumChannel& noise,
                                        const OptimizationResult& result);

}  // namespace noisegate

#endif
