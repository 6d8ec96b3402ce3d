/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Command-line front end; talks to the shared library exclusively through the
// C interface.

#include <string>

#include <CLI11.hpp>

#include "noisegate.h"

int main(int argc, char** argv) {
  CLI::App app{"noisegate: ante-post state-protection experiments"};
  app.set_version_flag("--version", std::string(noisegate_version()));
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_path;
  unsigned long long seed = 0;
  bool seed_set = false;
  int threads = 0;

  CLI::App* run = app.add_subcommand("run", "Run an experiment spec");
  run->add_option("spec", spec_path, "Experiment JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", out_path, "Override the output path");
  run->add_option("--seed", seed, "Override the optimizer seed")
      ->each([&](const std::string&) { seed_set = true; });
  run->add_option("--threads", threads,
                  "Worker threads (NOISEGATE_THREADS overrides)");

  std::string suite;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite (theorem1, theorem2, appendix, all)");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--seed", seed, "Random seed for the suite")
      ->each([&](const std::string&) { seed_set = true; });
  verify->add_option("--threads", threads,
                     "Worker threads (NOISEGATE_THREADS overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (run->parsed()) {
    return noisegate_run_experiment_file(
        spec_path.c_str(), out_path.empty() ? nullptr : out_path.c_str(),
        seed_set ? 1 : 0, seed, threads);
  }
  return noisegate_verify_suite(suite.c_str(), seed_set ? seed : 0, threads);
}
