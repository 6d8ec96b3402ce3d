/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "noisegate/geometry.hpp"
#include "noisegate/noise_models.hpp"
#include "noisegate/separability.hpp"

namespace noisegate {

using nlohmann::json;

namespace {

OptimizerConfig optimizer_from_json(const json& j) {
  if (!j.is_object()) {
    throw ConfigError("optimizer: expected an object");
  }
  OptimizerConfig cfg;
  auto read_int = [&](const char* key, int& slot) {
    if (j.contains(key)) slot = j[key].get<int>();
  };
  read_int("n_outcomes", cfg.n_outcomes);
  read_int("kraus_rank", cfg.kraus_rank);
  read_int("restarts", cfg.restarts);
  read_int("max_iters", cfg.max_iters);
  if (j.contains("step_init")) cfg.step_init = j["step_init"].get<double>();
  if (j.contains("grad_tol")) cfg.grad_tol = j["grad_tol"].get<double>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (cfg.n_outcomes < 1 || cfg.kraus_rank < 1 || cfg.restarts < 1 ||
      cfg.max_iters < 1 || cfg.step_init <= 0.0 || cfg.grad_tol <= 0.0) {
    throw ConfigError("optimizer: all fields must be positive");
  }
  return cfg;
}

}  // namespace

ExperimentSpec experiment_from_json(const json& j) {
  if (!j.is_object()) {
    throw ConfigError("experiment: expected a JSON object");
  }
  ExperimentSpec spec;
  spec.name = j.value("name", std::string("experiment"));
  if (!j.contains("noise")) {
    throw ConfigError("experiment: missing noise spec");
  }
  spec.noise = j["noise"];
  noise_from_json(spec.noise);  // validate early

  if (j.contains("protocol") && !j["protocol"].is_null()) {
    const json& p = j["protocol"];
    if (p.is_string()) {
      if (p.get<std::string>() != "auto") {
        throw ConfigError("experiment: protocol must be \"auto\" or a spec");
      }
    } else {
      protocol_from_json(p);  // validate early
      spec.protocol = p;
    }
  }
  if (j.contains("optimizer") && !j["optimizer"].is_null()) {
    spec.optimizer = optimizer_from_json(j["optimizer"]);
  }
  if (j.contains("sweep") && !j["sweep"].is_null()) {
    const json& s = j["sweep"];
    if (!s.is_object()) throw ConfigError("sweep: expected an object");
    if (s.contains("grid")) {
      if (s["grid"].get<std::string>() != "tetrahedron") {
        throw ConfigError("sweep: unknown grid '" +
                          s["grid"].get<std::string>() + "'");
      }
      TetrahedronGrid grid;
      grid.resolution = s.value("resolution", 0.1);
      if (grid.resolution <= 0.0 || grid.resolution > 2.0) {
        throw ConfigError("sweep: resolution must lie in (0, 2]");
      }
      if (spec.noise["family"].get<std::string>() != "canonical") {
        throw ConfigError("sweep: tetrahedron grid needs the canonical family");
      }
      spec.sweep = grid;
    } else {
      ParamSweep sweep;
      if (!s.contains("param") || !s.contains("from") || !s.contains("to") ||
          !s.contains("steps")) {
        throw ConfigError("sweep: expected {param, from, to, steps}");
      }
      sweep.param = s["param"].get<std::string>();
      sweep.from = s["from"].get<double>();
      sweep.to = s["to"].get<double>();
      sweep.steps = s["steps"].get<int>();
      if (sweep.steps < 1) throw ConfigError("sweep: steps must be >= 1");
      const std::string family = spec.noise["family"].get<std::string>();
      const bool valid =
          (family == "depolarizing" && sweep.param == "eps") ||
          (family == "amplitude_damping" && sweep.param == "gamma") ||
          (family == "canonical" &&
           (sweep.param == "d1" || sweep.param == "d2" || sweep.param == "d3"));
      if (!valid) {
        throw ConfigError("sweep: parameter '" + sweep.param +
                          "' is not a real field of the '" + family +
                          "' noise spec");
      }
      spec.sweep = sweep;
    }
  }
  if (j.contains("output") && !j["output"].is_null()) {
    const json& o = j["output"];
    spec.output.path = o.value("path", std::string());
    const std::string format = o.value("format", std::string("csv"));
    if (format == "csv") {
      spec.output.format = OutputSpec::Format::csv;
    } else if (format == "jsonl") {
      spec.output.format = OutputSpec::Format::jsonl;
    } else {
      throw ConfigError("output: format must be csv or jsonl");
    }
  }
  return spec;
}

namespace {

struct SweepPoint {
  std::vector<double> params;
  json noise;
};

std::vector<SweepPoint> expand_sweep(const ExperimentSpec& spec,
                                     std::vector<std::string>& param_columns) {
  std::vector<SweepPoint> points;
  if (!spec.sweep) {
    points.push_back(SweepPoint{{}, spec.noise});
    return points;
  }
  if (std::holds_alternative<ParamSweep>(*spec.sweep)) {
    const ParamSweep& sweep = std::get<ParamSweep>(*spec.sweep);
    param_columns.push_back(sweep.param);
    for (int i = 0; i < sweep.steps; ++i) {
      const double value =
          sweep.steps == 1
              ? sweep.from
              : sweep.from + (sweep.to - sweep.from) * i / (sweep.steps - 1);
      json noise = spec.noise;
      if (sweep.param == "eps" || sweep.param == "gamma") {
        noise[sweep.param] = value;
      } else {  // canonical d1/d2/d3
        const int axis = sweep.param[1] - '1';
        noise["dvec"][axis] = value;
      }
      points.push_back(SweepPoint{{value}, std::move(noise)});
    }
    return points;
  }
  const TetrahedronGrid& grid = std::get<TetrahedronGrid>(*spec.sweep);
  param_columns = {"d1", "d2", "d3"};
  const int levels = static_cast<int>(std::lround(2.0 / grid.resolution)) + 1;
  for (int i = 0; i < levels; ++i) {
    for (int k = 0; k < levels; ++k) {
      for (int l = 0; l < levels; ++l) {
        const Eigen::Vector3d dvec(-1.0 + i * grid.resolution,
                                   -1.0 + k * grid.resolution,
                                   -1.0 + l * grid.resolution);
        if (!in_tetrahedron(dvec, 1e-12)) continue;
        json noise = spec.noise;
        noise["dvec"] = json::array({dvec(0), dvec(1), dvec(2)});
        points.push_back(SweepPoint{{dvec(0), dvec(1), dvec(2)}, noise});
      }
    }
  }
  return points;
}

SweepRow evaluate_point(const SweepPoint& point, const ExperimentSpec& spec,
                        const RunOptions& options, std::size_t index) {
  SweepRow row;
  row.params = point.params;
  const QuantumChannel noise = noise_from_json(point.noise);
  const int d = noise.dim();

  row.fbar_do_nothing = protocol_fidelity(do_nothing(d), noise).value;
  row.fbar_dr = protocol_fidelity(discriminate_reprepare(d), noise).value;
  if (d == 2) {
    double best = row.fbar_do_nothing;
    for (int mu = 1; mu <= 3; ++mu) {
      best = std::max(best, protocol_fidelity(no_measurement(mu), noise).value);
    }
    row.fbar_no_measurement = best;
  }
  if (spec.protocol) {
    const Protocol protocol = protocol_from_json(*spec.protocol);
    if (protocol.dim() != d) {
      throw ConfigError("protocol: dimension does not match the noise");
    }
    row.fbar_protocol = protocol_fidelity(protocol, noise).value;
  }
  try {
    row.fbar_predicted = predict_optimum(noise).fbar;
  } catch (const std::invalid_argument&) {
    // Out of theorem scope (non-unital, non-depolarizing): exploratory point.
  }
  if (d == 2 && is_unital(noise.base())) {
    row.region = to_string(classify(canonical_form(noise).dvec));
  }
  row.eb = to_string(is_qcq(noise).status);

  if (spec.optimizer) {
    OptimizerConfig cfg = *spec.optimizer;
    if (options.seed_override) cfg.seed = *options.seed_override;
    cfg.seed += 1009 * static_cast<std::uint64_t>(index);
    cfg.threads = 1;  // points are already dispatched to the worker pool
    const OptimizationResult result = optimize(noise, cfg);
    row.fbar_optimizer = result.best_fbar;
    if (row.fbar_predicted) {
      row.gap_to_prediction = *row.fbar_predicted - result.best_fbar;
      row.violated = result.best_fbar > *row.fbar_predicted + 1e-9;
    }
  }
  return row;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string();
}

}  // namespace

SweepTable run_sweep(const ExperimentSpec& spec, const RunOptions& options) {
  SweepTable table;
  const std::vector<SweepPoint> points = expand_sweep(spec, table.param_columns);
  table.rows.resize(points.size());

  int pool = options.threads > 0
                 ? options.threads
                 : static_cast<int>(std::thread::hardware_concurrency());
  if (pool < 1) pool = 1;
  pool = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(pool), points.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size() || failed.load()) return;
      try {
        table.rows[i] = evaluate_point(points[i], spec, options, i);
      } catch (const std::exception& e) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        failed.store(true);
        if (error_message.empty()) error_message = e.what();
      }
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
  if (failed.load()) {
    throw ConfigError(error_message);
  }
  for (const SweepRow& row : table.rows) {
    table.any_violation = table.any_violation || row.violated;
  }
  return table;
}

void write_table(const SweepTable& table, const ExperimentSpec& spec,
                 const RunOptions& options) {
  const std::string path =
      options.out_override ? *options.out_override : spec.output.path;
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) {
      throw ConfigError("output: cannot open '" + path + "' for writing");
    }
    out = &file;
  }

  if (spec.output.format == OutputSpec::Format::csv) {
    for (const std::string& col : table.param_columns) *out << col << ",";
    *out << "fbar_do_nothing,fbar_no_measurement,fbar_dr,fbar_protocol,"
            "fbar_predicted,fbar_optimizer,gap_to_prediction,region,eb,"
            "violated\n";
    for (const SweepRow& row : table.rows) {
      for (double p : row.params) *out << format_double(p) << ",";
      *out << format_double(row.fbar_do_nothing) << ","
           << format_optional(row.fbar_no_measurement) << ","
           << format_double(row.fbar_dr) << ","
           << format_optional(row.fbar_protocol) << ","
           << format_optional(row.fbar_predicted) << ","
           << format_optional(row.fbar_optimizer) << ","
           << format_optional(row.gap_to_prediction) << "," << row.region
           << "," << row.eb << "," << (row.violated ? "1" : "0") << "\n";
    }
    return;
  }

  for (const SweepRow& row : table.rows) {
    json obj;
    for (std::size_t i = 0; i < table.param_columns.size(); ++i) {
      obj[table.param_columns[i]] = row.params[i];
    }
    obj["fbar_do_nothing"] = row.fbar_do_nothing;
    if (row.fbar_no_measurement) {
      obj["fbar_no_measurement"] = *row.fbar_no_measurement;
    }
    obj["fbar_dr"] = row.fbar_dr;
    if (row.fbar_protocol) obj["fbar_protocol"] = *row.fbar_protocol;
    if (row.fbar_predicted) obj["fbar_predicted"] = *row.fbar_predicted;
    if (row.fbar_optimizer) obj["fbar_optimizer"] = *row.fbar_optimizer;
    if (row.gap_to_prediction) obj["gap_to_prediction"] = *row.gap_to_prediction;
    obj["region"] = row.region;
    obj["eb"] = row.eb;
    obj["violated"] = row.violated;
    *out << obj.dump() << "\n";
  }
}

int run_experiment_json(const std::string& spec_text,
                        const RunOptions& options) {
  try {
    const json parsed = json::parse(spec_text);
    const ExperimentSpec spec = experiment_from_json(parsed);
    const SweepTable table = run_sweep(spec, options);
    write_table(table, spec, options);
    std::cerr << spec.name << ": " << table.rows.size() << " row(s)";
    if (table.any_violation) {
      std::cerr << "; optimizer exceeded a theoretical optimum";
    }
    std::cerr << "\n";
    return table.any_violation ? 1 : 0;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}

int run_experiment_file(const std::string& path, const RunOptions& options) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "config error: cannot read '" << path << "'\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return run_experiment_json(buffer.str(), options);
}

}  // namespace noisegate
