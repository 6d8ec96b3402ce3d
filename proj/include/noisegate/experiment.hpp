/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_EXPERIMENT_HPP
#define NOISEGATE_EXPERIMENT_HPP

#include <optional>
#include <variant>

#include <nlohmann/json.hpp>

#include "noisegate/optimizer.hpp"
#include "noisegate/serialize.hpp"

namespace noisegate {

struct ParamSweep {
  std::string param;  // must name a real field of the noise family
  double from = 0.0;
  double to = 0.0;
  int steps = 1;
};

struct TetrahedronGrid {
  double resolution = 0.1;
};

struct OutputSpec {
  std::string path;  // empty = stdout
  enum class Format { csv, jsonl } format = Format::csv;
};

struct ExperimentSpec {
  std::string name;
  nlohmann::json noise;  // noise spec, see noise_from_json
  std::optional<nlohmann::json> protocol;  // explicit protocol ("auto" = none)
  std::optional<OptimizerConfig> optimizer;
  std::optional<std::variant<ParamSweep, TetrahedronGrid>> sweep;
  OutputSpec output;
};

ExperimentSpec experiment_from_json(const nlohmann::json& j);

struct SweepRow {
  std::vector<double> params;
  double fbar_do_nothing = 0.0;
  std::optional<double> fbar_no_measurement;  // qubit only
  double fbar_dr = 0.0;
  std::optional<double> fbar_protocol;   // explicit protocol mode
  std::optional<double> fbar_predicted;  // when a theorem covers the noise
  std::optional<double> fbar_optimizer;
  std::optional<double> gap_to_prediction;
  std::string region;  // unital qubit region label, else empty
  std::string eb;      // QCQ verdict
  bool violated = false;
};

struct SweepTable {
  std::vector<std::string> param_columns;
  std::vector<SweepRow> rows;
  bool any_violation = false;
};

struct RunOptions {
  std::optional<std::uint64_t> seed_override;
  int threads = 0;  // 0 = hardware concurrency
  std::optional<std::string> out_override;
};

/// Evaluates every sweep point: classical protocol fidelities, the predicted
/// optimum where a theorem applies, region and entanglement-breaking flags,
/// and optionally the see-saw optimizer. Rows come back in sweep order.
SweepTable run_sweep(const ExperimentSpec& spec, const RunOptions& options);

void write_table(const SweepTable& table, const ExperimentSpec& spec,
                 const RunOptions& options);

/// Parse + run + write. Returns the process exit code: 0 on success, 1 when
/// an optimizer result exceeded a theoretical optimum (consistency failure),
/// 2 on configuration errors.
int run_experiment_json(const std::string& spec_text,
                        const RunOptions& options);
int run_experiment_file(const std::string& path, const RunOptions& options);

}  // namespace noisegate

#endif
