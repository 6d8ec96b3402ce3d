/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "noisegate/geometry.hpp"
#include "noisegate/noise_models.hpp"

using namespace noisegate;

TEST_CASE("depolarizing") {
  CHECK(testing::action_distance(depolarizing(2, 0.0).base(),
                                 CPMap::identity(2)) < 1e-15);

  // eps = 1 sends a sigma_z eigenstate to the maximally mixed state.
  Vec up = Vec::Zero(2);
  up(0) = 1.0;
  CHECK((depolarizing(2, 1.0).apply(up * up.adjoint()) -
         0.5 * Mat::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  // Bloch contraction by 1 - eps on every Pauli.
  const QuantumChannel half = depolarizing(2, 0.5);
  for (int i = 1; i <= 3; ++i) {
    const Mat& s = pauli_basis()[static_cast<std::size_t>(i)];
    CHECK((half.apply(s) - 0.5 * s).cwiseAbs().maxCoeff() < 1e-12);
  }

  for (int d : {2, 3, 5}) {
    const QuantumChannel n = depolarizing(d, 0.7);
    CHECK(is_tp(n.base()));
    CHECK(is_cp(n.base()));
    CHECK(is_unital(n.base()));
  }
  CHECK_THROWS_AS(depolarizing(2, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(depolarizing(2, -0.1), std::invalid_argument);
}

TEST_CASE("pauli channel") {
  CHECK(testing::action_distance(
            pauli_channel(PauliMixture({1, 0, 0, 0})).base(),
            CPMap::identity(2)) < 1e-15);

  // alpha = (1/2, 0, 0, 1/2) is the z-dephasing channel.
  const QuantumChannel dephasing = pauli_channel(PauliMixture({0.5, 0, 0, 0.5}));
  CHECK(testing::action_distance(dephasing.base(), edge_midpoint(0, 3).base()) <
        1e-15);

  // Uniform mixture acts as completely depolarizing.
  const QuantumChannel uniform =
      pauli_channel(PauliMixture({0.25, 0.25, 0.25, 0.25}));
  CHECK(testing::action_distance(uniform.base(), depolarizing(2, 1.0).base()) <
        1e-12);

  // depolarizing(2, eps) == pauli mixture (1 - 3 eps/4, eps/4, eps/4, eps/4).
  const double eps = 0.37;
  const QuantumChannel via_pauli = pauli_channel(
      PauliMixture({1.0 - 0.75 * eps, eps / 4.0, eps / 4.0, eps / 4.0}));
  CHECK(testing::action_distance(via_pauli.base(),
                                 depolarizing(2, eps).base()) < 1e-12);

  CHECK_THROWS_AS(PauliMixture({0.5, 0.5, 0.5, -0.5}), std::invalid_argument);
}

TEST_CASE("unital_from_canonical") {
  CHECK(testing::action_distance(unital_from_canonical({1, 1, 1}).base(),
                                 CPMap::identity(2)) < 1e-15);
  CHECK(testing::action_distance(unital_from_canonical({0, 0, 1}).base(),
                                 edge_midpoint(0, 3).base()) < 1e-15);

  // Coordinate map inversion: (0.4, 0.4, 1.0) <-> alpha = (0.7, 0, 0, 0.3).
  const QuantumChannel channel = unital_from_canonical({0.4, 0.4, 1.0});
  const QuantumChannel expected = pauli_channel(PauliMixture({0.7, 0, 0, 0.3}));
  CHECK(testing::action_distance(channel.base(), expected.base()) < 1e-12);

  // The advertised action: N(sigma_i) = d^i sigma_i.
  const std::array<double, 3> dvec = {0.3, -0.2, 0.4};
  const QuantumChannel n = unital_from_canonical(dvec);
  for (int i = 1; i <= 3; ++i) {
    const Mat& s = pauli_basis()[static_cast<std::size_t>(i)];
    CHECK((n.apply(s) - dvec[static_cast<std::size_t>(i - 1)] * s)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }

  // Round trip through the mixture coordinates.
  auto gen = testing::rng(53);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::array<double, 4> alpha{};
    double sum = 0.0;
    for (double& a : alpha) {
      a = uniform(gen);
      sum += a;
    }
    for (double& a : alpha) a /= sum;
    const PauliMixture mixture(alpha);
    const auto coords = mixture.canonical_coordinates();
    CHECK(testing::action_distance(unital_from_canonical(coords).base(),
                                   pauli_channel(mixture).base()) < 1e-12);
  }

  CHECK_THROWS_AS(unital_from_canonical({1.0, 1.0, -1.0}),
                  std::invalid_argument);
}

TEST_CASE("vertices and edge midpoints") {
  CHECK(testing::action_distance(vertex(0).base(), CPMap::identity(2)) <
        1e-15);
  CHECK(testing::action_distance(edge_midpoint(0, 3).base(),
                                 pauli_channel(PauliMixture({0.5, 0, 0, 0.5}))
                                     .base()) < 1e-15);

  // E_12 sits at canonical coordinates (0, 0, -1).
  const QuantumChannel e12 = edge_midpoint(1, 2);
  const auto& sigma = pauli_basis();
  CHECK((e12.apply(sigma[3]) + sigma[3]).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(e12.apply(sigma[1]).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(e12.apply(sigma[2]).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(edge_midpoint(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(vertex(4), std::invalid_argument);
}

TEST_CASE("amplitude damping") {
  CHECK(testing::action_distance(amplitude_damping(0.0).base(),
                                 CPMap::identity(2)) < 1e-15);

  // gamma = 1 maps everything onto |0><0|.
  auto gen = testing::rng(59);
  const DensityOperator rho = testing::random_density(2, gen);
  Mat ground = Mat::Zero(2, 2);
  ground(0, 0) = 1.0;
  CHECK((amplitude_damping(1.0).apply(rho.matrix()) - ground)
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  CHECK(is_tp(amplitude_damping(0.5).base()));
  CHECK(is_cp(amplitude_damping(0.5).base()));
  CHECK_FALSE(is_unital(amplitude_damping(0.5).base()));
  CHECK_THROWS_AS(amplitude_damping(1.5), std::invalid_argument);
}

TEST_CASE("unitary conjugation") {
  CHECK(testing::action_distance(
            unitary_conjugation(Mat::Identity(2, 2)).base(),
            CPMap::identity(2)) < 1e-15);

  // Tr_HS A_U = |tr U|^2; zero for sigma_z.
  CHECK(hs_trace(unitary_conjugation(pauli_basis()[3]).base()) ==
        doctest::Approx(0.0).epsilon(1e-14));
  auto gen = testing::rng(61);
  const Mat u = haar_unitary(3, gen);
  CHECK(hs_trace(unitary_conjugation(u).base()) ==
        doctest::Approx(std::norm(u.trace())).epsilon(1e-12));

  // exp(i pi sigma_3/4) conjugation swaps the first two canonical axes.
  const cxd i(0.0, 1.0);
  const double c = std::numbers::sqrt2 / 2.0;
  const Mat u_swap = c * (Mat::Identity(2, 2) + i * pauli_basis()[3]);
  const Mat v_swap = c * (Mat::Identity(2, 2) - i * pauli_basis()[3]);
  const std::array<double, 3> dvec = {0.5, -0.2, 0.3};
  const CPMap swapped =
      compose(CPMap(2, 2, {v_swap}),
              compose(unital_from_canonical(dvec).base(), CPMap(2, 2, {u_swap})));
  const CPMap expected = unital_from_canonical({-0.2, 0.5, 0.3}).base();
  CHECK(testing::action_distance(swapped, expected) < 1e-12);

  CHECK_THROWS_AS(unitary_conjugation(2.0 * Mat::Identity(2, 2)),
                  std::invalid_argument);
}
