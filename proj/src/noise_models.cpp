/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/noise_models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace noisegate {

PauliMixture::PauliMixture(std::array<double, 4> alpha, double tol)
    : alpha_(alpha) {
  double sum = 0.0;
  for (double& a : alpha_) {
    if (a < -tol) {
      throw std::invalid_argument("PauliMixture: negative weight");
    }
    a = std::max(a, 0.0);
    sum += a;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw std::invalid_argument("PauliMixture: weights must sum to 1");
  }
  for (double& a : alpha_) a /= sum;
}

std::array<double, 3> PauliMixture::canonical_coordinates() const {
  const auto& a = alpha_;
  return {a[0] + a[1] - a[2] - a[3], a[0] - a[1] + a[2] - a[3],
          a[0] - a[1] - a[2] + a[3]};
}

namespace {

// Heisenberg-Weyl shift and clock operators on C^d.
Mat weyl_shift(int d) {
  Mat x = Mat::Zero(d, d);
  for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

Mat weyl_clock(int d) {
  Mat z = Mat::Zero(d, d);
  const double theta = 2.0 * std::numbers::pi / d;
  for (int j = 0; j < d; ++j) {
    z(j, j) = std::polar(1.0, theta * j);
  }
  return z;
}

}  // namespace

QuantumChannel depolarizing(int d, double eps) {
  if (d < 2) {
    throw std::invalid_argument("depolarizing: d must be >= 2");
  }
  if (eps < 0.0 || eps > 1.0) {
    throw std::invalid_argument("depolarizing: eps must lie in [0,1]");
  }
  const Mat x = weyl_shift(d);
  const Mat z = weyl_clock(d);
  const double w_id = 1.0 - eps + eps / (d * d);
  const double w_rest = eps / (d * d);
  std::vector<Mat> kraus;
  kraus.reserve(static_cast<std::size_t>(d) * d);
  Mat xa = Mat::Identity(d, d);
  for (int a = 0; a < d; ++a) {
    Mat op = xa;
    for (int b = 0; b < d; ++b) {
      const double w = (a == 0 && b == 0) ? w_id : w_rest;
      if (w > 0.0) kraus.push_back(std::sqrt(w) * op);
      op = op * z;
    }
    xa = x * xa;
  }
  NoiseFamily family;
  family.kind = NoiseFamilyKind::depolarizing;
  family.d = d;
  family.eps = eps;
  return QuantumChannel(CPMap(d, d, std::move(kraus)), kDefaultTol, family);
}

QuantumChannel pauli_channel(const PauliMixture& mix) {
  const auto& sigma = pauli_basis();
  std::vector<Mat> kraus;
  for (int mu = 0; mu < 4; ++mu) {
    const double a = mix.alpha()[static_cast<std::size_t>(mu)];
    if (a > 0.0) kraus.push_back(std::sqrt(a) * sigma[static_cast<std::size_t>(mu)]);
  }
  NoiseFamily family;
  family.kind = NoiseFamilyKind::pauli;
  family.alpha = mix.alpha();
  return QuantumChannel(CPMap(2, 2, std::move(kraus)), kDefaultTol, family);
}

QuantumChannel unital_from_canonical(const std::array<double, 3>& dvec,
                                     double tol) {
  const auto [d1, d2, d3] = dvec;
  const std::array<double, 4> alpha = {
      (1.0 + d1 + d2 + d3) / 4.0, (1.0 + d1 - d2 - d3) / 4.0,
      (1.0 - d1 + d2 - d3) / 4.0, (1.0 - d1 - d2 + d3) / 4.0};
  for (double a : alpha) {
    if (a < -tol) {
      throw std::invalid_argument(
          "unital_from_canonical: dvec outside the tetrahedron T (not CP)");
    }
  }
  QuantumChannel channel = pauli_channel(PauliMixture(alpha, tol));
  NoiseFamily family = channel.family();
  family.kind = NoiseFamilyKind::canonical;
  family.dvec = dvec;
  return QuantumChannel(channel.base(), tol, family);
}

QuantumChannel vertex(int mu) {
  if (mu < 0 || mu > 3) {
    throw std::invalid_argument("vertex: mu must lie in 0..3");
  }
  std::array<double, 4> alpha{};
  alpha[static_cast<std::size_t>(mu)] = 1.0;
  return pauli_channel(PauliMixture(alpha));
}

QuantumChannel edge_midpoint(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3 || mu == nu) {
    throw std::invalid_argument("edge_midpoint: need distinct mu, nu in 0..3");
  }
  std::array<double, 4> alpha{};
  alpha[static_cast<std::size_t>(mu)] = 0.5;
  alpha[static_cast<std::size_t>(nu)] = 0.5;
  return pauli_channel(PauliMixture(alpha));
}

QuantumChannel amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("amplitude_damping: gamma must lie in [0,1]");
  }
  Mat k0 = Mat::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  Mat k1 = Mat::Zero(2, 2);
  k1(0, 1) = std::sqrt(gamma);
  NoiseFamily family;
  family.kind = NoiseFamilyKind::amplitude_damping;
  family.gamma = gamma;
  return QuantumChannel(CPMap(2, 2, {std::move(k0), std::move(k1)}),
                        kDefaultTol, family);
}

QuantumChannel unitary_conjugation(const Mat& u, double tol) {
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw std::invalid_argument("unitary_conjugation: matrix must be square");
  }
  const Mat gram = u.adjoint() * u;
  if ((gram - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("unitary_conjugation: matrix not unitary");
  }
  NoiseFamily family;
  family.kind = NoiseFamilyKind::unitary;
  return QuantumChannel(CPMap(static_cast<int>(u.cols()),
                              static_cast<int>(u.rows()), {u}),
                        tol, family);
}

}  // namespace noisegate
