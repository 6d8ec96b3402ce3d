/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_VERIFY_HPP
#define NOISEGATE_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace noisegate {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20260810;
  int threads = 0;
};

/// The numbered verification checks, 1..8:
///   1 fidelity formula vs Monte Carlo    5 dephasing optimum + f_omega bounds
///   2 reprepare universality 2/(d+1)     6 EB set = octahedron + PPT threshold
///   3 depolarizing phase diagram         7 fidelity is affine in the noise
///   4 unital-qubit phase diagram         8 canonical form round trip + symmetry
CheckResult run_check(int index, const VerifyOptions& options);

int check_count();
std::string check_name(int index);

/// Suites: "theorem1" = {3}, "theorem2" = {4}, "appendix" = {5}, "all" = 1..8.
/// Throws std::invalid_argument for unknown suite names.
std::vector<int> suite_checks(const std::string& suite);

/// Runs a suite, printing one pass/fail line per check; returns 0 when every
/// check passed, 1 otherwise.
int run_suite(const std::string& suite, const VerifyOptions& options,
              std::ostream& out);

}  // namespace noisegate

#endif
