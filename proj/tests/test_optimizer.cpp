/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "noisegate/geometry.hpp"
#include "noisegate/noise_models.hpp"
#include "noisegate/optimizer.hpp"

using namespace noisegate;

TEST_CASE("random protocols satisfy the constraints by construction") {
  OptimizerConfig cfg;
  cfg.n_outcomes = 3;
  cfg.kraus_rank = 2;
  for (std::uint64_t seed : {1ULL, 2ULL, 77ULL}) {
    const Protocol p = random_protocol(2, cfg, seed);
    CHECK(p.outcomes() == 3);
    // Instrument sums to TP within 1e-10.
    Mat acc = Mat::Zero(2, 2);
    for (int omega = 1; omega <= p.outcomes(); ++omega) {
      for (const Mat& k : p.branch(omega).kraus()) acc += k.adjoint() * k;
      CHECK(is_tp(p.recovery(omega).base(), 1e-10));
    }
    CHECK((acc - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
  }

  // Single outcome, rank 1: a unitary pre-map with a unitary recovery.
  OptimizerConfig unitary_cfg;
  unitary_cfg.n_outcomes = 1;
  unitary_cfg.kraus_rank = 1;
  const Protocol u = random_protocol(2, unitary_cfg, 5);
  CHECK(u.branch(1).kraus().size() == 1);
  const Mat& k = u.branch(1).kraus()[0];
  CHECK((k.adjoint() * k - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  // Same seed, same bits.
  const Protocol a = random_protocol(2, cfg, 123);
  const Protocol b = random_protocol(2, cfg, 123);
  for (int omega = 1; omega <= a.outcomes(); ++omega) {
    for (std::size_t i = 0; i < a.branch(omega).kraus().size(); ++i) {
      CHECK((a.branch(omega).kraus()[i] - b.branch(omega).kraus()[i])
                .cwiseAbs()
                .maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("objective equals protocol_fidelity") {
  CHECK(objective(do_nothing(2), depolarizing(2, 0.2)) ==
        doctest::Approx(0.9).epsilon(1e-12));
  auto gen = testing::rng(501);
  for (int d : {2, 3}) {
    const QuantumChannel noise = testing::random_tp_channel(d, 2, gen);
    CHECK(objective(discriminate_reprepare(d), noise) ==
          doctest::Approx(2.0 / (d + 1.0)).epsilon(1e-12));
    OptimizerConfig cfg;
    cfg.n_outcomes = 2;
    cfg.kraus_rank = 2;
    for (int trial = 0; trial < 5; ++trial) {
      const Protocol p = random_protocol(d, cfg, 600 + trial);
      const double fast = objective(p, noise);
      CHECK(fast == doctest::Approx(protocol_fidelity(p, noise).value)
                        .epsilon(1e-12));
      CHECK(fast <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("analytic gradient matches finite differences") {
  // The see-saw gradient is multilinear in the Kraus tensors; perturbing one
  // instrument Kraus entry and differencing the objective must agree with
  // the analytic direction to 1e-4 (central differences, step 1e-6).
  auto gen = testing::rng(503);
  const QuantumChannel noise = testing::random_tp_channel(2, 2, gen);
  OptimizerConfig cfg;
  cfg.n_outcomes = 2;
  cfg.kraus_rank = 2;
  const Protocol p = random_protocol(2, cfg, 7);
  const int d = 2;

  // Direct objective on raw Kraus lists (no isometry constraint needed for
  // the derivative check).
  auto raw_objective = [&](const std::vector<std::vector<Mat>>& branches) {
    double total = 0.0;
    for (int omega = 0; omega < 2; ++omega) {
      for (const Mat& bk : branches[static_cast<std::size_t>(omega)]) {
        for (const Mat& n : noise.kraus()) {
          const Mat staged = n * bk;
          for (const Mat& rk : p.recovery(omega + 1).kraus()) {
            total += std::norm(rk.transpose().cwiseProduct(staged).sum());
          }
        }
      }
    }
    return total;
  };

  std::vector<std::vector<Mat>> branches = {p.branch(1).kraus(),
                                            p.branch(2).kraus()};

  // Analytic gradient wrt conj(I_ok): sum_jm t (C N)^dag.
  auto analytic = [&](int omega, int k) {
    Mat acc = Mat::Zero(d, d);
    for (const Mat& rk : p.recovery(omega + 1).kraus()) {
      for (const Mat& n : noise.kraus()) {
        const Mat q = rk * n;
        const cxd t = q.transpose()
                          .cwiseProduct(branches[static_cast<std::size_t>(
                              omega)][static_cast<std::size_t>(k)])
                          .sum();
        acc += std::conj(t) * q;
      }
    }
    return Mat(acc.adjoint());
  };

  const double h = 1e-6;
  for (int omega = 0; omega < 2; ++omega) {
    for (int k = 0; k < 2; ++k) {
      const Mat grad = analytic(omega, k);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
          auto probe = [&](cxd delta) {
            auto copy = branches;
            copy[static_cast<std::size_t>(omega)][static_cast<std::size_t>(k)](
                r, c) += delta;
            return raw_objective(copy);
          };
          // d f / d Re = 2 Re(grad), d f / d Im = 2 Im(grad).
          const double d_re = (probe(cxd(h, 0)) - probe(cxd(-h, 0))) / (2 * h);
          const double d_im = (probe(cxd(0, h)) - probe(cxd(0, -h))) / (2 * h);
          CHECK(d_re == doctest::Approx(2.0 * grad(r, c).real()).epsilon(1e-4));
          CHECK(d_im == doctest::Approx(2.0 * grad(r, c).imag()).epsilon(1e-4));
        }
      }
    }
  }
}

TEST_CASE("optimize recovers the identity protocol for noiseless evolution") {
  OptimizerConfig cfg;
  cfg.n_outcomes = 1;
  cfg.kraus_rank = 1;
  cfg.restarts = 3;
  cfg.seed = 11;
  cfg.threads = 1;
  const OptimizationResult result =
      optimize(QuantumChannel(CPMap::identity(2)), cfg);
  CHECK(result.best_fbar == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(result.per_restart.size() == 3);
  // Feasibility of the reported protocol.
  CHECK(protocol_fidelity(result.best_protocol,
                          QuantumChannel(CPMap::identity(2)))
            .value == doctest::Approx(result.best_fbar).epsilon(1e-9));
}

TEST_CASE("optimize strong depolarizing qubit noise") {
  OptimizerConfig cfg;
  cfg.n_outcomes = 2;
  cfg.kraus_rank = 2;
  cfg.restarts = 8;
  cfg.seed = 2024;
  const QuantumChannel noise = depolarizing(2, 0.9);
  const OptimizationResult result = optimize(noise, cfg);
  CHECK(result.best_fbar <= 2.0 / 3.0 + 1e-9);
  CHECK(result.best_fbar >= 2.0 / 3.0 - 1e-3);
  REQUIRE(result.gap_to_prediction.has_value());
  CHECK(*result.gap_to_prediction >= -1e-9);
  CHECK(protocol_fidelity(result.best_protocol, noise).value ==
        doctest::Approx(result.best_fbar).epsilon(1e-9));
}

TEST_CASE("optimize unital corner noise") {
  OptimizerConfig cfg;
  cfg.n_outcomes = 2;
  cfg.kraus_rank = 2;
  cfg.restarts = 8;
  cfg.seed = 31;
  const QuantumChannel noise = unital_from_canonical({0.4, 0.4, 1.0});
  const OptimizationResult result = optimize(noise, cfg);
  CHECK(result.best_fbar <= 0.8 + 1e-9);
  CHECK(result.best_fbar >= 0.8 - 1e-3);
}

TEST_CASE("optimizer determinism") {
  OptimizerConfig cfg;
  cfg.n_outcomes = 2;
  cfg.kraus_rank = 2;
  cfg.restarts = 4;
  cfg.max_iters = 80;
  cfg.seed = 99;
  const QuantumChannel noise = depolarizing(2, 0.5);
  cfg.threads = 1;
  const OptimizationResult serial = optimize(noise, cfg);
  cfg.threads = 4;
  const OptimizationResult parallel = optimize(noise, cfg);
  CHECK(serial.best_fbar == parallel.best_fbar);
  for (std::size_t i = 0; i < serial.per_restart.size(); ++i) {
    CHECK(serial.per_restart[i].final_fbar ==
          parallel.per_restart[i].final_fbar);
    CHECK(serial.per_restart[i].iters == parallel.per_restart[i].iters);
  }
}

TEST_CASE("certification report") {
  OptimizerConfig cfg;
  cfg.n_outcomes = 2;
  cfg.kraus_rank = 2;
  cfg.restarts = 4;
  cfg.seed = 7;
  const QuantumChannel noise = depolarizing(2, 0.5);
  const OptimizationResult result = optimize(noise, cfg);
  const CertificationReport report = certify_upper_bound(noise, result);
  CHECK(report.has_prediction);
  CHECK(report.predicted == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(report.gap >= -1e-9);
  CHECK_FALSE(report.violated);
  CHECK(report.fbar_dr == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  // Non-unital, non-depolarizing noise: exploratory.
  const QuantumChannel damping = amplitude_damping(0.4);
  const OptimizationResult exploratory = optimize(damping, cfg);
  const CertificationReport open_report =
      certify_upper_bound(damping, exploratory);
  CHECK_FALSE(open_report.has_prediction);
  CHECK(open_report.exploratory);
  CHECK(open_report.fbar_do_nothing ==
        doctest::Approx(protocol_fidelity(do_nothing(2), damping).value));
  // The optimizer should at least match the best classical baseline.
  CHECK(exploratory.best_fbar >= open_report.fbar_do_nothing - 1e-6);
  CHECK(exploratory.best_fbar >= open_report.fbar_dr - 1e-6);
}
