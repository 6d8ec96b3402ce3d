/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/optimizer.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "noisegate/geometry.hpp"
#include "noisegate/random.hpp"

namespace noisegate {

namespace {

void validate(const OptimizerConfig& cfg) {
  if (cfg.n_outcomes < 1 || cfg.kraus_rank < 1 || cfg.restarts < 1 ||
      cfg.max_iters < 1 || cfg.step_init <= 0.0 || cfg.grad_tol <= 0.0) {
    throw std::invalid_argument("OptimizerConfig: all fields must be positive");
  }
}

// Search state: the instrument as one stacked isometry of shape (M r d) x d,
// each recovery as an (r d) x d isometry.
struct SeesawState {
  int d = 0;
  int outcomes = 0;
  int rank = 0;
  Mat instrument;
  std::vector<Mat> recoveries;

  Eigen::Block<Mat> branch_kraus(int omega, int k) {
    return instrument.block((omega * rank + k) * d, 0, d, d);
  }
  Eigen::Block<const Mat> branch_kraus(int omega, int k) const {
    return instrument.block((omega * rank + k) * d, 0, d, d);
  }
  Eigen::Block<const Mat> recovery_kraus(int omega, int j) const {
    return recoveries[static_cast<std::size_t>(omega)].block(j * d, 0, d, d);
  }
};

SeesawState sample_state(int d, const OptimizerConfig& cfg,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SeesawState state;
  state.d = d;
  state.outcomes = cfg.n_outcomes;
  state.rank = cfg.kraus_rank;
  state.instrument = haar_isometry(cfg.n_outcomes * cfg.kraus_rank * d, d, rng);
  state.recoveries.reserve(static_cast<std::size_t>(cfg.n_outcomes));
  for (int omega = 0; omega < cfg.n_outcomes; ++omega) {
    state.recoveries.push_back(haar_isometry(cfg.kraus_rank * d, d, rng));
  }
  return state;
}

Protocol to_protocol(const SeesawState& state) {
  std::vector<std::pair<CPMap, QuantumChannel>> pairs;
  pairs.reserve(static_cast<std::size_t>(state.outcomes));
  for (int omega = 0; omega < state.outcomes; ++omega) {
    std::vector<Mat> branch;
    std::vector<Mat> recovery;
    for (int k = 0; k < state.rank; ++k) {
      branch.emplace_back(state.branch_kraus(omega, k));
      recovery.emplace_back(state.recovery_kraus(omega, k));
    }
    pairs.emplace_back(CPMap(state.d, state.d, std::move(branch)),
                       QuantumChannel(CPMap(state.d, state.d,
                                            std::move(recovery))));
  }
  return Protocol(std::move(pairs));
}

// Hilbert-Schmidt trace of the average operation,
// sum_{omega j m k} |tr(C_oj N_m I_ok)|^2.
double hs_objective(const SeesawState& state, const std::vector<Mat>& noise) {
  const int d = state.d;
  double total = 0.0;
  Mat p(d, d);
  for (int omega = 0; omega < state.outcomes; ++omega) {
    for (int k = 0; k < state.rank; ++k) {
      const auto branch = state.branch_kraus(omega, k);
      for (const Mat& n : noise) {
        p.noalias() = n * branch;
        for (int j = 0; j < state.rank; ++j) {
          const auto recovery = state.recovery_kraus(omega, j);
          const cxd t = recovery.transpose().cwiseProduct(p).sum();
          total += std::norm(t);
        }
      }
    }
  }
  return total;
}

// Euclidean conjugate gradients of the objective in the instrument and
// recovery Kraus blocks; multilinearity gives
//   d f / d conj(I_ok) = sum_{j m} t (C_oj N_m)^dag,
//   d f / d conj(C_oj) = sum_{m k} t (N_m I_ok)^dag.
void gradients(const SeesawState& state, const std::vector<Mat>& noise,
               Mat& grad_inst, std::vector<Mat>& grad_rec) {
  const int d = state.d;
  const int r = state.rank;
  const std::size_t n_kraus = noise.size();
  grad_inst.setZero(state.instrument.rows(), d);
  for (int omega = 0; omega < state.outcomes; ++omega) {
    grad_rec[static_cast<std::size_t>(omega)].setZero(r * d, d);
  }

  std::vector<Mat> q(static_cast<std::size_t>(r) * n_kraus);  // C_oj N_m
  Mat p(d, d);
  Mat acc(d, d);
  for (int omega = 0; omega < state.outcomes; ++omega) {
    for (int j = 0; j < r; ++j) {
      const auto recovery = state.recovery_kraus(omega, j);
      for (std::size_t m = 0; m < n_kraus; ++m) {
        q[static_cast<std::size_t>(j) * n_kraus + m].noalias() =
            recovery * noise[m];
      }
    }
    for (int k = 0; k < r; ++k) {
      const auto branch = state.branch_kraus(omega, k);
      acc.setZero();
      for (int j = 0; j < r; ++j) {
        for (std::size_t m = 0; m < n_kraus; ++m) {
          const Mat& qjm = q[static_cast<std::size_t>(j) * n_kraus + m];
          const cxd t = qjm.transpose().cwiseProduct(branch).sum();
          acc.noalias() += std::conj(t) * qjm;
        }
      }
      grad_inst.block((omega * r + k) * d, 0, d, d) = acc.adjoint();
    }
    for (int j = 0; j < r; ++j) {
      const auto recovery = state.recovery_kraus(omega, j);
      acc.setZero();
      for (int k = 0; k < r; ++k) {
        const auto branch = state.branch_kraus(omega, k);
        for (std::size_t m = 0; m < n_kraus; ++m) {
          p.noalias() = noise[m] * branch;
          const cxd t = recovery.transpose().cwiseProduct(p).sum();
          acc.noalias() += std::conj(t) * p;
        }
      }
      grad_rec[static_cast<std::size_t>(omega)].block(j * d, 0, d, d) =
          acc.adjoint();
    }
  }
}

// Nearest isometry (polar factor).
Mat retract(const Mat& x) {
  Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

struct RestartOutcome {
  SeesawState state;
  RestartStats stats;
  double objective = 0.0;
};

RestartOutcome run_restart(const QuantumChannel& noise,
                           const OptimizerConfig& cfg, std::uint64_t seed) {
  const int d = noise.dim();
  RestartOutcome out;
  out.state = sample_state(d, cfg, seed);
  SeesawState& state = out.state;
  const std::vector<Mat>& noise_kraus = noise.kraus();

  double f = hs_objective(state, noise_kraus);
  Mat grad_inst;
  std::vector<Mat> grad_rec(static_cast<std::size_t>(cfg.n_outcomes));
  double step_inst = cfg.step_init;
  double step_rec = cfg.step_init;

  constexpr double kMinStep = 1e-15;
  constexpr double kGrow = 1.3;
  constexpr double kMaxStep = 4.0;

  int iter = 0;
  for (; iter < cfg.max_iters; ++iter) {
    const double f_sweep_start = f;
    gradients(state, noise_kraus, grad_inst, grad_rec);

    // Instrument ascent with backtracking.
    bool improved_inst = false;
    while (step_inst >= kMinStep) {
      SeesawState trial = state;
      trial.instrument = retract(state.instrument + step_inst * grad_inst);
      const double f_trial = hs_objective(trial, noise_kraus);
      if (f_trial > f) {
        state.instrument = std::move(trial.instrument);
        f = f_trial;
        step_inst = std::min(step_inst * kGrow, kMaxStep);
        improved_inst = true;
        break;
      }
      step_inst *= 0.5;
    }

    // Recovery ascent; instrument gradients are stale after the instrument
    // step, so recompute the recovery block before stepping.
    gradients(state, noise_kraus, grad_inst, grad_rec);
    bool improved_rec = false;
    while (step_rec >= kMinStep) {
      SeesawState trial = state;
      for (int omega = 0; omega < state.outcomes; ++omega) {
        trial.recoveries[static_cast<std::size_t>(omega)] = retract(
            state.recoveries[static_cast<std::size_t>(omega)] +
            step_rec * grad_rec[static_cast<std::size_t>(omega)]);
      }
      const double f_trial = hs_objective(trial, noise_kraus);
      if (f_trial > f) {
        state.recoveries = std::move(trial.recoveries);
        f = f_trial;
        step_rec = std::min(step_rec * kGrow, kMaxStep);
        improved_rec = true;
        break;
      }
      step_rec *= 0.5;
    }

    if (!improved_inst && !improved_rec) {
      out.stats.converged = true;
      ++iter;
      break;
    }
    if (f - f_sweep_start < cfg.grad_tol) {
      out.stats.converged = true;
      ++iter;
      break;
    }
    // Reset collapsed steps so the next sweep can probe again.
    step_inst = std::max(step_inst, kMinStep * 4.0);
    step_rec = std::max(step_rec, kMinStep * 4.0);
  }
  out.stats.iters = iter;
  out.objective = f;
  out.stats.final_fbar = (d + f) / (d * (d + 1.0));
  return out;
}

}  // namespace

Protocol random_protocol(int d, const OptimizerConfig& cfg,
                         std::uint64_t seed) {
  validate(cfg);
  if (d < 2) {
    throw std::invalid_argument("random_protocol: d must be >= 2");
  }
  return to_protocol(sample_state(d, cfg, seed));
}

double objective(const Protocol& p, const QuantumChannel& noise) {
  if (noise.dim() != p.dim() || !noise.base().is_square()) {
    throw std::invalid_argument("objective: dimension mismatch");
  }
  const int d = p.dim();
  double total = 0.0;
  for (int omega = 1; omega <= p.outcomes(); ++omega) {
    for (const Mat& branch : p.branch(omega).kraus()) {
      for (const Mat& n : noise.kraus()) {
        const Mat staged = n * branch;
        for (const Mat& recovery : p.recovery(omega).kraus()) {
          total += std::norm(recovery.transpose().cwiseProduct(staged).sum());
        }
      }
    }
  }
  return (d + total) / (d * (d + 1.0));
}

OptimizationResult optimize(const QuantumChannel& noise,
                            const OptimizerConfig& cfg) {
  validate(cfg);
  if (!noise.base().is_square()) {
    throw std::invalid_argument("optimize: square channels only");
  }

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  int pool = cfg.threads > 0
                 ? cfg.threads
                 : static_cast<int>(std::thread::hardware_concurrency());
  if (pool < 1) pool = 1;
  pool = std::min(pool, cfg.restarts);

  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= cfg.restarts) return;
      outcomes[static_cast<std::size_t>(i)] =
          run_restart(noise, cfg, cfg.seed + static_cast<std::uint64_t>(i));
    }
  };
  if (pool == 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t) workers.emplace_back(work);
    for (std::thread& w : workers) w.join();
  }

  int best = 0;
  for (int i = 1; i < cfg.restarts; ++i) {
    if (outcomes[static_cast<std::size_t>(i)].stats.final_fbar >
        outcomes[static_cast<std::size_t>(best)].stats.final_fbar) {
      best = i;
    }
  }

  OptimizationResult result{
      outcomes[static_cast<std::size_t>(best)].stats.final_fbar,
      to_protocol(outcomes[static_cast<std::size_t>(best)].state),
      {},
      std::nullopt};
  result.per_restart.reserve(static_cast<std::size_t>(cfg.restarts));
  for (const RestartOutcome& o : outcomes) result.per_restart.push_back(o.stats);
  try {
    result.gap_to_prediction = predict_optimum(noise).fbar - result.best_fbar;
  } catch (const std::invalid_argument&) {
    // No theoretical optimum covers this noise; exploratory run.
  }
  return result;
}

CertificationReport certify_upper_bound(const QuantumChannel& noise,
                                        const OptimizationResult& result) {
  CertificationReport report;
  const int d = noise.dim();
  report.fbar_do_nothing = protocol_fidelity(do_nothing(d), noise).value;
  report.fbar_dr = protocol_fidelity(discriminate_reprepare(d), noise).value;
  report.fbar_no_measurement_best = report.fbar_do_nothing;
  if (d == 2) {
    for (int mu = 1; mu <= 3; ++mu) {
      report.fbar_no_measurement_best =
          std::max(report.fbar_no_measurement_best,
                   protocol_fidelity(no_measurement(mu), noise).value);
    }
  }
  try {
    const OptimalPrediction prediction = predict_optimum(noise);
    report.has_prediction = true;
    report.predicted = prediction.fbar;
    report.gap = prediction.fbar - result.best_fbar;
    report.violated = result.best_fbar > prediction.fbar + 1e-9;
  } catch (const std::invalid_argument&) {
    report.exploratory = true;
  }
  return report;
}

}  // namespace noisegate
