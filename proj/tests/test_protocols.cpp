/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include "helpers.hpp"
#include "noisegate/fidelity.hpp"
#include "noisegate/noise_models.hpp"
#include "noisegate/optimizer.hpp"

using namespace noisegate;

namespace {

Protocol dr_z_basis() { return discriminate_reprepare(2); }

}  // namespace

TEST_CASE("outcome probabilities") {
  const Protocol dr = dr_z_basis();
  const Instrument inst = dr.instrument();

  // Measuring an eigenstate gives its outcome with certainty.
  Vec up = Vec::Zero(2);
  up(0) = 1.0;
  const DensityOperator eigenstate(up * up.adjoint());
  CHECK(outcome_probability(inst, 1, eigenstate) == doctest::Approx(1.0));
  CHECK(outcome_probability(inst, 2, eigenstate) ==
        doctest::Approx(0.0).epsilon(1e-15));

  const DensityOperator mixed(0.5 * Mat::Identity(2, 2));
  CHECK(outcome_probability(inst, 1, mixed) == doctest::Approx(0.5));
  CHECK(outcome_probability(inst, 2, mixed) == doctest::Approx(0.5));

  const Instrument trivial({CPMap::identity(2)});
  CHECK(outcome_probability(trivial, 1, mixed) == doctest::Approx(1.0));
  CHECK_THROWS_AS(outcome_probability(trivial, 2, mixed), std::out_of_range);

  // Probabilities sum to 1 on random states and instruments.
  auto gen = testing::rng(71);
  OptimizerConfig cfg;
  cfg.n_outcomes = 3;
  cfg.kraus_rank = 2;
  const Protocol random = random_protocol(2, cfg, 99);
  const Instrument random_inst = random.instrument();
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = testing::random_density(2, gen);
    double total = 0.0;
    for (int omega = 1; omega <= random_inst.outcomes(); ++omega) {
      const double p = outcome_probability(random_inst, omega, rho);
      CHECK(p >= -1e-12);
      CHECK(p <= 1.0 + 1e-12);
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("induced POVM") {
  const Povm projective = induced_povm(dr_z_basis().instrument());
  Vec up = Vec::Zero(2), down = Vec::Zero(2);
  up(0) = 1.0;
  down(1) = 1.0;
  CHECK((projective.element(1) - up * up.adjoint()).cwiseAbs().maxCoeff() <
        1e-15);
  CHECK((projective.element(2) - down * down.adjoint()).cwiseAbs().maxCoeff() <
        1e-15);

  const Povm trivial = induced_povm(Instrument({CPMap::identity(2)}));
  CHECK((trivial.element(1) - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-15);

  // POVM statistics agree with instrument probabilities.
  auto gen = testing::rng(73);
  OptimizerConfig cfg;
  cfg.n_outcomes = 4;
  cfg.kraus_rank = 2;
  const Instrument inst = random_protocol(3, cfg, 5).instrument();
  const Povm povm = induced_povm(inst);
  Mat sum = Mat::Zero(3, 3);
  for (const Mat& m : povm.elements()) sum += m;
  CHECK((sum - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityOperator rho = testing::random_density(3, gen);
    for (int omega = 1; omega <= inst.outcomes(); ++omega) {
      const double via_povm =
          (rho.matrix() * povm.element(omega)).trace().real();
      CHECK(via_povm == doctest::Approx(outcome_probability(inst, omega, rho))
                            .epsilon(1e-10));
    }
  }
}

TEST_CASE("average operation") {
  auto gen = testing::rng(79);
  const QuantumChannel noise = testing::random_tp_channel(2, 2, gen);

  // Do-nothing protocol: the average operation is the noise itself.
  CHECK(testing::action_distance(
            average_operation(do_nothing(2), noise).base(), noise.base()) <
        1e-13);

  // Reprepare protocol: completely dephasing in the measured basis, with
  // Hilbert-Schmidt trace 2 regardless of the noise.
  const QuantumChannel dephased = average_operation(dr_z_basis(), noise);
  CHECK(hs_trace(dephased.base()) == doctest::Approx(2.0).epsilon(1e-12));
  Mat off = Mat::Zero(2, 2);
  off(0, 1) = 1.0;
  CHECK(dephased.apply(off).cwiseAbs().maxCoeff() < 1e-13);

  // Off-diagonals of the measured basis are annihilated by construction.
  for (int d : {2, 3}) {
    const QuantumChannel n = testing::random_tp_channel(d, 2, gen);
    const QuantumChannel avg = average_operation(discriminate_reprepare(d), n);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        Mat e = Mat::Zero(d, d);
        e(i, j) = 1.0;
        CHECK(avg.apply(e).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }

  // no_measurement(mu) cancels the vertex noise A_{sigma_mu}.
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(testing::action_distance(
              average_operation(no_measurement(mu), vertex(mu)).base(),
              CPMap::identity(2)) < 1e-14);
  }

  // Average operations of random protocols stay TP and CP.
  for (int trial = 0; trial < 5; ++trial) {
    OptimizerConfig cfg;
    cfg.n_outcomes = 1 + trial % 3;
    cfg.kraus_rank = 1 + trial % 2;
    const Protocol p = random_protocol(2, cfg, 1000 + trial);
    const QuantumChannel avg = average_operation(p, noise);
    CHECK(is_tp(avg.base(), 1e-9));
    CHECK(is_cp(avg.base(), 1e-9));
  }
}

TEST_CASE("protocol fidelities of the named protocols") {
  CHECK(protocol_fidelity(do_nothing(2), depolarizing(2, 0.5)).value ==
        doctest::Approx(0.75).epsilon(1e-12));
  CHECK(protocol_fidelity(do_nothing(2),
                          QuantumChannel(CPMap::identity(2)))
            .value == doctest::Approx(1.0));
  CHECK(protocol_fidelity(do_nothing(3), depolarizing(3, 0.4)).value ==
        doctest::Approx(1.0 - 0.4 * 2.0 / 3.0).epsilon(1e-12));

  // Canonical noise: Fbar = 1/2 + (d1 + d2 + d3)/6.
  const std::array<double, 3> dvec = {0.1, -0.4, 0.3};
  CHECK(protocol_fidelity(do_nothing(2), unital_from_canonical(dvec)).value ==
        doctest::Approx(0.5 + (0.1 - 0.4 + 0.3) / 6.0).epsilon(1e-12));

  // no_measurement against the sign-flipped point matches do_nothing at the
  // flipped coordinates.
  CHECK(protocol_fidelity(no_measurement(3),
                          unital_from_canonical({-0.3, -0.3, 0.9}))
            .value == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(protocol_fidelity(no_measurement(1), vertex(1)).value ==
        doctest::Approx(1.0).epsilon(1e-12));

  // mu = 0 is do_nothing.
  auto gen = testing::rng(83);
  const QuantumChannel noise = testing::random_tp_channel(2, 2, gen);
  CHECK(protocol_fidelity(no_measurement(0), noise).value ==
        doctest::Approx(protocol_fidelity(do_nothing(2), noise).value));
}

TEST_CASE("discriminate and reprepare") {
  auto gen = testing::rng(89);
  for (int d : {2, 3}) {
    const QuantumChannel noise = testing::random_tp_channel(d, 2, gen);
    CHECK(protocol_fidelity(discriminate_reprepare(d), noise).value ==
          doctest::Approx(2.0 / (d + 1.0)).epsilon(1e-12));
  }

  // Basis independence to 1e-12.
  const QuantumChannel noise = testing::random_tp_channel(3, 3, gen);
  for (int trial = 0; trial < 3; ++trial) {
    const Mat u = haar_unitary(3, gen);
    std::vector<PureState> basis;
    for (int i = 0; i < 3; ++i) basis.emplace_back(Vec(u.col(i)));
    CHECK(protocol_fidelity(discriminate_reprepare(basis), noise).value ==
          doctest::Approx(0.5).epsilon(1e-12));
  }

  // Non-orthonormal basis rejected.
  Vec v0 = Vec::Zero(2), v1 = Vec::Zero(2);
  v0(0) = 1.0;
  v1(0) = 1.0 / std::sqrt(2.0);
  v1(1) = 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(
      discriminate_reprepare(std::vector<PureState>{PureState(v0),
                                                    PureState(v1)}),
      std::invalid_argument);
}

TEST_CASE("protocol construction validates the instrument") {
  // Branches that do not sum to a TP map are rejected.
  const CPMap half(2, 2, {std::sqrt(0.5) * Mat::Identity(2, 2)});
  CHECK_THROWS_AS(
      Protocol({{half, QuantumChannel(CPMap::identity(2))}}),
      std::invalid_argument);
  CHECK_THROWS_AS(Instrument({half}), std::invalid_argument);
}

TEST_CASE("fidelity is affine in the noise") {
  auto gen = testing::rng(97);
  OptimizerConfig cfg;
  cfg.n_outcomes = 2;
  cfg.kraus_rank = 2;
  const Protocol p = random_protocol(2, cfg, 4242);
  const QuantumChannel n1 = testing::random_tp_channel(2, 2, gen);
  const QuantumChannel n2 = testing::random_tp_channel(2, 2, gen);
  const double f1 = protocol_fidelity(p, n1).value;
  const double f2 = protocol_fidelity(p, n2).value;
  for (double a : {0.25, 0.5, 0.75}) {
    const QuantumChannel mixed = mix({{1.0 - a, n1}, {a, n2}});
    CHECK(protocol_fidelity(p, mixed).value ==
          doctest::Approx((1.0 - a) * f1 + a * f2).epsilon(1e-10));
  }
}
