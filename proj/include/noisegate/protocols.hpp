/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_PROTOCOLS_HPP
#define NOISEGATE_PROTOCOLS_HPP

#include <utility>
#include <vector>

#include "noisegate/channels.hpp"

namespace noisegate {

/// Finite family of CP maps whose sum is trace-preserving. Outcome labels are
/// 1-based, matching the usual omega = 1..M indexing of measurement outcomes.
class Instrument {
 public:
  explicit Instrument(std::vector<CPMap> branches, double tol = kDefaultTol);

  int outcomes() const { return static_cast<int>(branches_.size()); }
  int dim() const { return branches_.front().dim_in(); }
  const CPMap& branch(int omega) const;  // omega in 1..M
  const std::vector<CPMap>& branches() const { return branches_; }

 private:
  std::vector<CPMap> branches_;
};

/// Positive operators summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<Mat> elements, double tol = kDefaultTol);

  int outcomes() const { return static_cast<int>(elements_.size()); }
  const Mat& element(int omega) const;  // omega in 1..M
  const std::vector<Mat>& elements() const { return elements_; }

 private:
  std::vector<Mat> elements_;
};

/// Ex-ante instrument branch paired with its outcome-conditioned ex-post
/// recovery channel.
class Protocol {
 public:
  explicit Protocol(std::vector<std::pair<CPMap, QuantumChannel>> pairs,
                    double tol = kDefaultTol);

  int outcomes() const { return static_cast<int>(pairs_.size()); }
  int dim() const { return pairs_.front().first.dim_in(); }
  const CPMap& branch(int omega) const;
  const QuantumChannel& recovery(int omega) const;
  const std::vector<std::pair<CPMap, QuantumChannel>>& pairs() const {
    return pairs_;
  }
  Instrument instrument() const;

 private:
  std::vector<std::pair<CPMap, QuantumChannel>> pairs_;
};

/// tr I_omega(rho); the chance of outcome omega on input rho.
double outcome_probability(const Instrument& inst, int omega,
                           const DensityOperator& rho);

/// POVM with elements M_omega = I_omega^*(1).
Povm induced_povm(const Instrument& inst);

/// The effective channel sum_omega C_omega o N o I_omega.
QuantumChannel average_operation(const Protocol& p,
                                 const QuantumChannel& noise);

/// Single outcome, identity instrument and identity recovery.
Protocol do_nothing(int d);

/// Qubit protocol with identity instrument and recovery A_{sigma_mu}.
Protocol no_measurement(int mu);

/// Project onto an orthonormal basis before the noise, reprepare the
/// identified basis state after it. Branch omega has the single Kraus
/// |phi_omega><phi_omega|; the recovery is the constant map onto that state.
Protocol discriminate_reprepare(const std::vector<PureState>& basis,
                                double tol = kDefaultTol);

/// discriminate_reprepare on the computational basis of C^d.
Protocol discriminate_reprepare(int d);

}  // namespace noisegate

#endif
