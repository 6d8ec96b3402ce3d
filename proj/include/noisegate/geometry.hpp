/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_GEOMETRY_HPP
#define NOISEGATE_GEOMETRY_HPP

#include <string>

#include "noisegate/protocols.hpp"

namespace noisegate {

/// Canonical form of a unital qubit channel: N = A_{u_out} o N_c o A_{u_in}
/// with N_c the signed-diagonal channel N_c(sigma_i) = dvec[i] sigma_i.
///
/// Sign convention: the Bloch matrix is factored through a det-corrected SVD,
/// so all components are nonnegative whenever det B >= 0 (zero or two negative
/// entries are equivalent under the tetrahedral symmetry; we use zero). A
/// negative-determinant Bloch matrix forces an odd sign pattern; the single
/// negative sign is carried by the smallest singular value, dvec[2].
struct UnitalQubitCanonical {
  Eigen::Vector3d dvec;
  Mat u_in;   // U
  Mat u_out;  // V
};

/// Region of the unital-qubit tetrahedron T = O u T_0 u T_1 u T_2 u T_3.
struct RegionLabel {
  enum class Kind { octahedron, corner, boundary };
  Kind kind = Kind::octahedron;
  int mu = -1;  // which T_mu for corner/boundary labels
};

std::string to_string(const RegionLabel& label);

/// Bloch matrix B_ij = (1/2) tr[sigma_i map(sigma_j)] of a qubit map.
Eigen::Matrix3d bloch_matrix(const CPMap& map);

/// All recovered alpha^mu >= -tol, i.e. the four linear forms
/// 1 +- d1 +- d2 +- d3 with an even number of minus signs are >= -4 tol.
bool in_tetrahedron(const Eigen::Vector3d& dvec, double tol = kDefaultTol);

/// Octahedron when sum|d^i| <= 1, corner tetrahedron T_mu when the
/// corresponding linear form reaches 1, boundary within tol of the interface.
/// Throws if dvec lies outside T.
RegionLabel classify(const Eigen::Vector3d& dvec, double tol = kDefaultTol);

/// Throws for non-unital or non-qubit channels.
UnitalQubitCanonical canonical_form(const QuantumChannel& n,
                                    double tol = kDefaultTol);

/// One element of the tetrahedral symmetry: the signed-permutation action on
/// canonical coordinates, a generating unitary pair realizing it through
/// N' = A_v o N o A_u, and the induced permutation of the vertices E_mu.
struct SymmetryTransform {
  Eigen::Matrix3d action;
  Mat u;
  Mat v;
  std::array<int, 4> vertex_perm;
};

/// The 24 tetrahedral symmetry maps, generated by the pairs (1, sigma_i) and
/// (e^{i pi sigma_i/4}, e^{-i pi sigma_i/4}).
const std::vector<SymmetryTransform>& symmetry_group();

struct OptimalPrediction {
  Protocol protocol;
  double fbar = 0.0;
  std::string protocol_name;  // do_nothing | no_measurement | discriminate_reprepare
};

/// Theoretical optimum for the covered noise classes: the depolarizing family
/// in any dimension (do-nothing below eps = d/(d+1), reprepare above) and
/// unital qubit noise via its tetrahedron region. Throws for anything else.
OptimalPrediction predict_optimum(const QuantumChannel& n,
                                  double tol = kDefaultTol);

}  // namespace noisegate

#endif
