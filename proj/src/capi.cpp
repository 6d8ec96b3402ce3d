/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <new>
#include <string>

#include <nlohmann/json.hpp>

#include "noisegate/experiment.hpp"
#include "noisegate/geometry.hpp"
#include "noisegate/noise_models.hpp"
#include "noisegate/optimizer.hpp"
#include "noisegate/separability.hpp"
#include "noisegate/verify.hpp"

struct ng_channel {
  noisegate::QuantumChannel value;
};

struct ng_protocol {
  noisegate::Protocol value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
noisegate_status guarded(Fn&& fn) {
  try {
    fn();
    return NOISEGATE_OK;
  } catch (const noisegate::ConfigError& e) {
    set_error(e.what());
    return NOISEGATE_ERR_PARSE;
  } catch (const nlohmann::json::exception& e) {
    set_error(e.what());
    return NOISEGATE_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return NOISEGATE_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return NOISEGATE_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

int effective_threads(int threads) {
  if (const char* env = std::getenv("NOISEGATE_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return threads;
}

}  // namespace

extern "C" {

const char* noisegate_version(void) { return "0.1.0"; }

const char* noisegate_last_error(void) { return g_last_error.c_str(); }

noisegate_status noisegate_channel_depolarizing(int d, double eps,
                                                ng_channel** out) {
  return guarded([&] { *out = new ng_channel{noisegate::depolarizing(d, eps)}; });
}

noisegate_status noisegate_channel_pauli(const double alpha[4],
                                         ng_channel** out) {
  return guarded([&] {
    *out = new ng_channel{noisegate::pauli_channel(
        noisegate::PauliMixture({alpha[0], alpha[1], alpha[2], alpha[3]}))};
  });
}

noisegate_status noisegate_channel_canonical(const double dvec[3],
                                             ng_channel** out) {
  return guarded([&] {
    *out = new ng_channel{
        noisegate::unital_from_canonical({dvec[0], dvec[1], dvec[2]})};
  });
}

noisegate_status noisegate_channel_amplitude_damping(double gamma,
                                                     ng_channel** out) {
  return guarded(
      [&] { *out = new ng_channel{noisegate::amplitude_damping(gamma)}; });
}

noisegate_status noisegate_channel_from_json(const char* json,
                                             ng_channel** out) {
  return guarded([&] {
    const nlohmann::json parsed = nlohmann::json::parse(json);
    if (parsed.is_object() && parsed.contains("family")) {
      *out = new ng_channel{noisegate::noise_from_json(parsed)};
    } else {
      *out = new ng_channel{noisegate::channel_from_json(parsed)};
    }
  });
}

noisegate_status noisegate_channel_to_json(const ng_channel* channel,
                                           char** out_json) {
  return guarded([&] {
    *out_json =
        copy_string(noisegate::cpmap_to_json(channel->value.base()).dump());
  });
}

void noisegate_channel_free(ng_channel* channel) { delete channel; }

int noisegate_channel_dim(const ng_channel* channel) {
  return channel->value.dim();
}

noisegate_status noisegate_channel_is_unital(const ng_channel* channel,
                                             int* out) {
  return guarded(
      [&] { *out = noisegate::is_unital(channel->value.base()) ? 1 : 0; });
}

noisegate_status noisegate_channel_hs_trace(const ng_channel* channel,
                                            double* out) {
  return guarded([&] { *out = noisegate::hs_trace(channel->value.base()); });
}

noisegate_status noisegate_channel_average_fidelity(const ng_channel* channel,
                                                    double* out) {
  return guarded(
      [&] { *out = noisegate::average_fidelity(channel->value).value; });
}

noisegate_status noisegate_channel_average_fidelity_mc(
    const ng_channel* channel, long long n, unsigned long long seed,
    int threads, double* out_value, double* out_std_error) {
  return guarded([&] {
    const noisegate::FidelityReport report = noisegate::average_fidelity_mc(
        channel->value, n, seed, effective_threads(threads));
    if (out_value != nullptr) *out_value = report.value;
    if (out_std_error != nullptr) *out_std_error = report.std_error;
  });
}

noisegate_status noisegate_channel_qcq(const ng_channel* channel,
                                       int* out_status, double* out_witness) {
  return guarded([&] {
    const noisegate::QcqVerdict verdict = noisegate::is_qcq(channel->value);
    if (out_status != nullptr) *out_status = static_cast<int>(verdict.status);
    if (out_witness != nullptr) {
      *out_witness = verdict.witness.value_or(0.0);
    }
  });
}

noisegate_status noisegate_channel_canonical_form(const ng_channel* channel,
                                                  double out_dvec[3],
                                                  char* out_region,
                                                  size_t region_len) {
  return guarded([&] {
    const noisegate::UnitalQubitCanonical canonical =
        noisegate::canonical_form(channel->value);
    if (out_dvec != nullptr) {
      for (int i = 0; i < 3; ++i) out_dvec[i] = canonical.dvec(i);
    }
    if (out_region != nullptr && region_len > 0) {
      const std::string label =
          noisegate::to_string(noisegate::classify(canonical.dvec));
      std::snprintf(out_region, region_len, "%s", label.c_str());
    }
  });
}

noisegate_status noisegate_protocol_do_nothing(int d, ng_protocol** out) {
  return guarded([&] { *out = new ng_protocol{noisegate::do_nothing(d)}; });
}

noisegate_status noisegate_protocol_no_measurement(int mu, ng_protocol** out) {
  return guarded(
      [&] { *out = new ng_protocol{noisegate::no_measurement(mu)}; });
}

noisegate_status noisegate_protocol_reprepare(int d, ng_protocol** out) {
  return guarded(
      [&] { *out = new ng_protocol{noisegate::discriminate_reprepare(d)}; });
}

noisegate_status noisegate_protocol_from_json(const char* json,
                                              ng_protocol** out) {
  return guarded([&] {
    *out = new ng_protocol{
        noisegate::protocol_from_json(nlohmann::json::parse(json))};
  });
}

noisegate_status noisegate_protocol_to_json(const ng_protocol* protocol,
                                            char** out_json) {
  return guarded([&] {
    *out_json = copy_string(noisegate::protocol_to_json(protocol->value).dump());
  });
}

void noisegate_protocol_free(ng_protocol* protocol) { delete protocol; }

noisegate_status noisegate_protocol_fidelity(const ng_protocol* protocol,
                                             const ng_channel* noise,
                                             double* out) {
  return guarded([&] {
    *out = noisegate::protocol_fidelity(protocol->value, noise->value).value;
  });
}

noisegate_status noisegate_predict_optimum(const ng_channel* noise,
                                           ng_protocol** out_protocol,
                                           double* out_fbar) {
  return guarded([&] {
    noisegate::OptimalPrediction prediction =
        noisegate::predict_optimum(noise->value);
    if (out_fbar != nullptr) *out_fbar = prediction.fbar;
    if (out_protocol != nullptr) {
      *out_protocol = new ng_protocol{std::move(prediction.protocol)};
    }
  });
}

void noisegate_optimizer_config_default(noisegate_optimizer_config* cfg) {
  const noisegate::OptimizerConfig defaults;
  cfg->n_outcomes = defaults.n_outcomes;
  cfg->kraus_rank = defaults.kraus_rank;
  cfg->restarts = defaults.restarts;
  cfg->max_iters = defaults.max_iters;
  cfg->step_init = defaults.step_init;
  cfg->grad_tol = defaults.grad_tol;
  cfg->seed = defaults.seed;
  cfg->threads = defaults.threads;
}

noisegate_status noisegate_optimize(const ng_channel* noise,
                                    const noisegate_optimizer_config* cfg,
                                    double* out_best_fbar,
                                    ng_protocol** out_best_protocol) {
  return guarded([&] {
    noisegate::OptimizerConfig config;
    config.n_outcomes = cfg->n_outcomes;
    config.kraus_rank = cfg->kraus_rank;
    config.restarts = cfg->restarts;
    config.max_iters = cfg->max_iters;
    config.step_init = cfg->step_init;
    config.grad_tol = cfg->grad_tol;
    config.seed = cfg->seed;
    config.threads = effective_threads(cfg->threads);
    noisegate::OptimizationResult result =
        noisegate::optimize(noise->value, config);
    if (out_best_fbar != nullptr) *out_best_fbar = result.best_fbar;
    if (out_best_protocol != nullptr) {
      *out_best_protocol = new ng_protocol{std::move(result.best_protocol)};
    }
  });
}

int noisegate_run_experiment_file(const char* path, const char* out_override,
                                  int has_seed, unsigned long long seed,
                                  int threads) {
  try {
    noisegate::RunOptions options;
    if (out_override != nullptr) options.out_override = std::string(out_override);
    if (has_seed != 0) options.seed_override = seed;
    options.threads = effective_threads(threads);
    return noisegate::run_experiment_file(path, options);
  } catch (const std::exception& e) {
    set_error(e.what());
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int noisegate_verify_suite(const char* suite, unsigned long long seed,
                           int threads) {
  try {
    noisegate::VerifyOptions options;
    if (seed != 0) options.seed = seed;
    options.threads = effective_threads(threads);
    return noisegate::run_suite(suite, options, std::cout);
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    set_error(e.what());
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

void noisegate_string_free(char* text) { std::free(text); }

}  // extern "C"
