/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/serialize.hpp"

#include <nlohmann/json.hpp>

#include "noisegate/noise_models.hpp"

namespace noisegate {

using nlohmann::json;

nlohmann::json cpmap_to_json(const CPMap& map) {
  json kraus = json::array();
  for (const Mat& k : map.kraus()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < k.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < k.cols(); ++c) {
        row.push_back(json::array({k(r, c).real(), k(r, c).imag()}));
      }
      rows.push_back(std::move(row));
    }
    kraus.push_back(std::move(rows));
  }
  return json{{"dim_in", map.dim_in()},
              {"dim_out", map.dim_out()},
              {"kraus", std::move(kraus)}};
}

namespace {

double number_at(const json& j, const char* ctx) {
  if (!j.is_number()) {
    throw ConfigError(std::string(ctx) + ": expected a number");
  }
  return j.get<double>();
}

}  // namespace

CPMap cpmap_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim_in") || !j.contains("dim_out") ||
      !j.contains("kraus") || !j["kraus"].is_array()) {
    throw ConfigError("channel: expected {dim_in, dim_out, kraus}");
  }
  const int din = j["dim_in"].get<int>();
  const int dout = j["dim_out"].get<int>();
  if (din < 1 || dout < 1) {
    throw ConfigError("channel: dimensions must be positive");
  }
  std::vector<Mat> kraus;
  for (const json& mat : j["kraus"]) {
    if (!mat.is_array() || static_cast<int>(mat.size()) != dout) {
      throw ConfigError("channel: Kraus operator must have dim_out rows");
    }
    Mat k(dout, din);
    for (int r = 0; r < dout; ++r) {
      const json& row = mat[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != din) {
        throw ConfigError("channel: Kraus row must have dim_in entries");
      }
      for (int c = 0; c < din; ++c) {
        const json& entry = row[static_cast<std::size_t>(c)];
        if (!entry.is_array() || entry.size() != 2) {
          throw ConfigError("channel: entry must be [re, im]");
        }
        k(r, c) = cxd(number_at(entry[0], "channel entry"),
                      number_at(entry[1], "channel entry"));
      }
    }
    kraus.push_back(std::move(k));
  }
  if (kraus.empty()) {
    throw ConfigError("channel: empty Kraus list");
  }
  return CPMap(din, dout, std::move(kraus));
}

QuantumChannel channel_from_json(const json& j) {
  try {
    return QuantumChannel(cpmap_from_json(j));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("channel: ") + e.what());
  }
}

nlohmann::json protocol_to_json(const Protocol& p) {
  json pairs = json::array();
  for (const auto& [branch, recovery] : p.pairs()) {
    pairs.push_back(json{{"branch", cpmap_to_json(branch)},
                         {"recovery", cpmap_to_json(recovery.base())}});
  }
  return json{{"pairs", std::move(pairs)}};
}

Protocol protocol_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array() ||
      j["pairs"].empty()) {
    throw ConfigError("protocol: expected {pairs: [...]}");
  }
  std::vector<std::pair<CPMap, QuantumChannel>> pairs;
  for (const json& pair : j["pairs"]) {
    if (!pair.is_object() || !pair.contains("branch") ||
        !pair.contains("recovery")) {
      throw ConfigError("protocol: pair must hold {branch, recovery}");
    }
    pairs.emplace_back(cpmap_from_json(pair["branch"]),
                       channel_from_json(pair["recovery"]));
  }
  try {
    return Protocol(std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("protocol: ") + e.what());
  }
}

QuantumChannel noise_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw ConfigError("noise: expected {family, ...}");
  }
  const std::string family = j["family"].get<std::string>();
  try {
    if (family == "depolarizing") {
      if (!j.contains("d") || !j.contains("eps")) {
        throw ConfigError("noise: depolarizing needs {d, eps}");
      }
      return depolarizing(j["d"].get<int>(), number_at(j["eps"], "eps"));
    }
    if (family == "pauli") {
      if (!j.contains("alpha") || !j["alpha"].is_array() ||
          j["alpha"].size() != 4) {
        throw ConfigError("noise: pauli needs alpha[4]");
      }
      std::array<double, 4> alpha{};
      for (int i = 0; i < 4; ++i) {
        alpha[static_cast<std::size_t>(i)] =
            number_at(j["alpha"][static_cast<std::size_t>(i)], "alpha");
      }
      return pauli_channel(PauliMixture(alpha));
    }
    if (family == "canonical") {
      if (!j.contains("dvec") || !j["dvec"].is_array() ||
          j["dvec"].size() != 3) {
        throw ConfigError("noise: canonical needs dvec[3]");
      }
      std::array<double, 3> dvec{};
      for (int i = 0; i < 3; ++i) {
        dvec[static_cast<std::size_t>(i)] =
            number_at(j["dvec"][static_cast<std::size_t>(i)], "dvec");
      }
      return unital_from_canonical(dvec);
    }
    if (family == "amplitude_damping") {
      if (!j.contains("gamma")) {
        throw ConfigError("noise: amplitude_damping needs gamma");
      }
      return amplitude_damping(number_at(j["gamma"], "gamma"));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("noise: ") + e.what());
  }
  throw ConfigError("noise: unknown family '" + family + "'");
}

nlohmann::json noise_to_json(const NoiseFamily& family) {
  switch (family.kind) {
    case NoiseFamilyKind::depolarizing:
      return json{{"family", "depolarizing"}, {"d", family.d},
                  {"eps", family.eps}};
    case NoiseFamilyKind::pauli:
      return json{{"family", "pauli"},
                  {"alpha", json::array({family.alpha[0], family.alpha[1],
                                         family.alpha[2], family.alpha[3]})}};
    case NoiseFamilyKind::canonical:
      return json{{"family", "canonical"},
                  {"dvec", json::array({family.dvec[0], family.dvec[1],
                                        family.dvec[2]})}};
    case NoiseFamilyKind::amplitude_damping:
      return json{{"family", "amplitude_damping"}, {"gamma", family.gamma}};
    default:
      throw std::invalid_argument("noise_to_json: channel has no family tag");
  }
}

}  // namespace noisegate
