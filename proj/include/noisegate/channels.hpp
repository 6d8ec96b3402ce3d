/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_CHANNELS_HPP
#define NOISEGATE_CHANNELS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "noisegate/operators.hpp"

namespace noisegate {

/// Completely positive map in Kraus form. Trace non-increasing is allowed;
/// general CP maps arise as instrument branches.
class CPMap {
 public:
  CPMap(int dim_in, int dim_out, std::vector<Mat> kraus);

  static CPMap identity(int d);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  bool is_square() const { return dim_in_ == dim_out_; }
  const std::vector<Mat>& kraus() const { return kraus_; }

  /// sum_j K_j rho K_j^dag. Throws on dimension mismatch.
  Mat apply(const Mat& rho) const;

 private:
  int dim_in_;
  int dim_out_;
  std::vector<Mat> kraus_;
};

/// Descriptor for the built-in noise families; carried as channel metadata so
/// that family-specific classification shortcuts (depolarizing thresholds) and
/// sweep parameterization can recognize what they are looking at.
enum class NoiseFamilyKind {
  none,
  depolarizing,
  pauli,
  canonical,
  amplitude_damping,
  unitary,
};

struct NoiseFamily {
  NoiseFamilyKind kind = NoiseFamilyKind::none;
  int d = 0;                        // depolarizing
  double eps = 0.0;                 // depolarizing
  double gamma = 0.0;               // amplitude_damping
  std::array<double, 4> alpha{};    // pauli
  std::array<double, 3> dvec{};     // canonical
};

/// Trace-preserving CP map. Construction verifies sum K^dag K = 1 within tol.
class QuantumChannel {
 public:
  explicit QuantumChannel(CPMap base, double tol = kDefaultTol,
                          NoiseFamily family = {});

  const CPMap& base() const { return base_; }
  operator const CPMap&() const { return base_; }

  int dim_in() const { return base_.dim_in(); }
  int dim_out() const { return base_.dim_out(); }
  int dim() const { return base_.dim_in(); }
  const std::vector<Mat>& kraus() const { return base_.kraus(); }
  Mat apply(const Mat& rho) const { return base_.apply(rho); }

  const NoiseFamily& family() const { return family_; }

 private:
  CPMap base_;
  NoiseFamily family_;
};

/// Choi state of a map: (id (x) map)(|Psi><Psi|) with |Psi> the maximally
/// entangled state, first tensor factor the input system. Normalized so a TP
/// map has unit trace; multiply by dim_in^2 for the unnormalized convention
/// (sum_ij |i><j| (x) map(|i><j|)) scaled by dim_in relative to this one.
struct ChoiMatrix {
  Mat op;
  int dim_in;
  int dim_out;
};

ChoiMatrix to_choi(const CPMap& map);

/// Kraus extraction by eigendecomposition of the Choi matrix; eigenvalues of
/// the dim_in-scaled Choi below 1e-12 are discarded to keep the Kraus rank
/// minimal. Throws if the Choi has an eigenvalue below -tol (not CP).
CPMap from_choi(const ChoiMatrix& choi, double tol = kDefaultTol);

/// Kraus set = all products {K_outer K_inner}.
CPMap compose(const CPMap& outer, const CPMap& inner);

/// Adjoint Kraus set; satisfies tr(map(X) Y) = tr(X dual(map)(Y)).
CPMap dual(const CPMap& map);

/// Trace of the map as an operator on the Hilbert-Schmidt space,
/// sum_i <V_i, map(V_i)>_HS over an orthonormal operator basis.
/// Requires a square map.
double hs_trace(const CPMap& map);

/// Matrix of the map on vec'd operators (row-major vec), dim_out^2 x dim_in^2.
Mat superoperator(const CPMap& map);

bool is_tp(const CPMap& map, double tol = kDefaultTol);
bool is_cp(const CPMap& map, double tol = kDefaultTol);
bool is_unital(const CPMap& map, double tol = kDefaultTol);

/// Convex combination of channels, realized exactly by concatenating
/// sqrt(weight)-scaled Kraus lists. Weights must be nonnegative and sum to 1.
QuantumChannel mix(const std::vector<std::pair<double, QuantumChannel>>& parts,
                   double tol = kDefaultTol);

}  // namespace noisegate

#endif
