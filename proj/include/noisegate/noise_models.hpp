/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_NOISE_MODELS_HPP
#define NOISEGATE_NOISE_MODELS_HPP

#include <array>

#include "noisegate/channels.hpp"

namespace noisegate {

/// Convex weights over the four Pauli conjugations.
class PauliMixture {
 public:
  explicit PauliMixture(std::array<double, 4> alpha,
                        double tol = kDefaultTol);

  const std::array<double, 4>& alpha() const { return alpha_; }

  /// Signed-diagonal coordinates of the channel sum_mu alpha^mu A_{sigma_mu}:
  /// d^i = the eigenvalue of sigma_i under the channel.
  std::array<double, 3> canonical_coordinates() const;

 private:
  std::array<double, 4> alpha_;
};

/// rho -> (1-eps) rho + eps tr(rho) 1/d. Kraus realization uses the
/// Heisenberg-Weyl basis {X^a Z^b}: weight 1-eps+eps/d^2 on the identity and
/// eps/d^2 on each of the d^2-1 non-identity elements.
QuantumChannel depolarizing(int d, double eps);

/// Kraus set {sqrt(alpha^mu) sigma_mu}; unital TPCP.
QuantumChannel pauli_channel(const PauliMixture& mix);

/// Pauli channel with prescribed signed-diagonal action
/// N(sigma_i) = d^i sigma_i; throws if dvec lies outside the tetrahedron T
/// (recovered alpha^mu < 0, i.e. not CP).
QuantumChannel unital_from_canonical(const std::array<double, 3>& dvec,
                                     double tol = kDefaultTol);

/// Conjugation by sigma_mu (vertex E_mu of the tetrahedron).
QuantumChannel vertex(int mu);

/// Equal mixture of vertex(mu) and vertex(nu); requires mu != nu.
QuantumChannel edge_midpoint(int mu, int nu);

/// Standard two-Kraus damping channel; non-unital for gamma > 0.
QuantumChannel amplitude_damping(double gamma);

/// rho -> u rho u^dag; throws if u is not unitary within tol.
QuantumChannel unitary_conjugation(const Mat& u, double tol = kDefaultTol);

}  // namespace noisegate

#endif
