/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_SERIALIZE_HPP
#define NOISEGATE_SERIALIZE_HPP

#include <nlohmann/json_fwd.hpp>

#include "noisegate/protocols.hpp"

namespace noisegate {

/// Schema or semantic problem in user-supplied configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {dim_in, dim_out, kraus: [[[re,im], ...], ...]}; doubles survive the
/// round trip bit-exactly.
nlohmann::json cpmap_to_json(const CPMap& map);
CPMap cpmap_from_json(const nlohmann::json& j);
QuantumChannel channel_from_json(const nlohmann::json& j);

/// {pairs: [{branch, recovery}, ...]} in outcome order.
nlohmann::json protocol_to_json(const Protocol& p);
Protocol protocol_from_json(const nlohmann::json& j);

/// Noise spec {"family": "depolarizing"|"pauli"|"canonical"|
/// "amplitude_damping", ...params}.
QuantumChannel noise_from_json(const nlohmann::json& j);
nlohmann::json noise_to_json(const NoiseFamily& family);

}  // namespace noisegate

#endif
