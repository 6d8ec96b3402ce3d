/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include "helpers.hpp"
#include "noisegate/operators.hpp"

using namespace noisegate;

TEST_CASE("hs_inner on Pauli operators") {
  const auto& sigma = pauli_basis();
  CHECK(hs_inner(sigma[0], sigma[0]).real() == doctest::Approx(2.0));
  CHECK(std::abs(hs_inner(sigma[1], sigma[2])) < 1e-15);
  const Mat z_normalized = sigma[3] / std::sqrt(2.0);
  CHECK(hs_inner(z_normalized, z_normalized).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(hs_inner(sigma[0], Mat::Identity(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("hs_inner is conjugate symmetric and positive definite") {
  auto gen = testing::rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat x = complex_gaussian(3, 3, gen);
    const Mat y = complex_gaussian(3, 3, gen);
    CHECK(std::abs(hs_inner(x, y) - std::conj(hs_inner(y, x))) < 1e-12);
    CHECK(hs_inner(x, x).real() > 0.0);
    CHECK(std::abs(hs_inner(x, x).imag()) < 1e-12);
  }
}

TEST_CASE("pauli algebra") {
  const auto& sigma = pauli_basis();
  CHECK((sigma[0] - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(sigma[3](0, 0) == cxd(1.0, 0.0));
  CHECK(sigma[3](1, 1) == cxd(-1.0, 0.0));
  // sigma_1 sigma_2 = i sigma_3
  CHECK((sigma[1] * sigma[2] - cxd(0, 1) * sigma[3]).cwiseAbs().maxCoeff() <
        1e-15);
  for (const Mat& s : sigma) {
    CHECK(is_hermitian(s));
    CHECK((s * s - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("orthonormal operator basis") {
  for (int d : {2, 3}) {
    const auto basis = orthonormal_operator_basis(d);
    REQUIRE(static_cast<int>(basis.size()) == d * d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const cxd gram = hs_inner(basis[i], basis[j]);
        CHECK(std::abs(gram - (i == j ? 1.0 : 0.0)) < 1e-15);
      }
    }
  }
  CHECK_THROWS_AS(orthonormal_operator_basis(1), std::invalid_argument);
}

TEST_CASE("tensor product") {
  const Mat id2 = Mat::Identity(2, 2);
  CHECK((tensor(id2, id2) - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  auto gen = testing::rng(3);
  const Mat a = complex_gaussian(2, 2, gen);
  const Mat b = complex_gaussian(3, 3, gen);
  CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) < 1e-12);

  // e1 (x) e2 is an eigenvector of sigma_z (x) sigma_z with eigenvalue -1
  const auto& sigma = pauli_basis();
  Vec v = Vec::Zero(4);
  v(0 * 2 + 1) = 1.0;  // e1 (x) e2
  CHECK(((tensor(sigma[3], sigma[3]) * v) + v).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("partial transpose") {
  auto gen = testing::rng(5);
  const Mat x = complex_gaussian(6, 6, gen);
  for (int subsystem : {0, 1}) {
    const Mat once = partial_transpose(x, 2, 3, subsystem);
    const Mat twice = partial_transpose(once, 2, 3, subsystem);
    CHECK((twice - x).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(once.trace() - x.trace()) < 1e-12);
  }

  const Mat a = complex_gaussian(2, 2, gen);
  const Mat b = complex_gaussian(3, 3, gen);
  CHECK((partial_transpose(tensor(a, b), 2, 3, 1) - tensor(a, b.transpose()))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  CHECK((partial_transpose(tensor(a, b), 2, 3, 0) - tensor(a.transpose(), b))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  // Partial transpose of the maximally entangled qubit pair: the trace-1
  // projector has PT eigenvalues {1/2, 1/2, 1/2, -1/2}.
  Vec psi = Vec::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  const Mat pt = partial_transpose(psi * psi.adjoint(), 2, 2, 0);
  const Eigen::VectorXd eigs = hermitian_eigenvalues(pt);
  CHECK(eigs(0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(eigs(3) == doctest::Approx(0.5).epsilon(1e-12));

  // Hermiticity is preserved
  const Mat h = testing::random_hermitian(6, gen);
  CHECK(is_hermitian(partial_transpose(h, 2, 3, 0), 1e-12));
  CHECK_THROWS_AS(partial_transpose(x, 2, 2, 0), std::invalid_argument);
}

TEST_CASE("partial trace") {
  auto gen = testing::rng(17);
  const Mat a = complex_gaussian(2, 2, gen);
  const Mat b = complex_gaussian(3, 3, gen);
  const Mat ab = tensor(a, b);
  CHECK((partial_trace(ab, 2, 3, 0) - a.trace() * b).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((partial_trace(ab, 2, 3, 1) - b.trace() * a).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("hermitian eigenvalues") {
  const auto& sigma = pauli_basis();
  const Eigen::VectorXd z_eigs = hermitian_eigenvalues(sigma[3]);
  CHECK(z_eigs(0) == doctest::Approx(-1.0));
  CHECK(z_eigs(1) == doctest::Approx(1.0));

  const Eigen::VectorXd id_eigs = hermitian_eigenvalues(Mat::Identity(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(id_eigs(i) == doctest::Approx(1.0));

  auto gen = testing::rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat h = testing::random_hermitian(4, gen);
    CHECK(hermitian_eigenvalues(h).sum() ==
          doctest::Approx(h.trace().real()).epsilon(1e-12));
  }
  CHECK_THROWS_AS(hermitian_eigenvalues(complex_gaussian(3, 3, gen)),
                  std::invalid_argument);
}

TEST_CASE("density operator and pure state invariants") {
  CHECK_THROWS_AS(DensityOperator{pauli_basis()[1]}, std::invalid_argument);
  CHECK_THROWS_AS(DensityOperator{2.0 * Mat::Identity(2, 2)},
                  std::invalid_argument);
  const DensityOperator mixed(0.5 * Mat::Identity(2, 2));
  CHECK(mixed.dim() == 2);

  Vec v = Vec::Zero(2);
  v(0) = 1.0;
  const PureState e0(v);
  const Mat expected = 0.5 * (Mat::Identity(2, 2) + pauli_basis()[3]);
  CHECK((e0.projector() - expected).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(PureState(Vec::Zero(2)), std::invalid_argument);
}
