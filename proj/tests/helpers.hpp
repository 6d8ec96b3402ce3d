/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_TESTS_HELPERS_HPP
#define NOISEGATE_TESTS_HELPERS_HPP

#include <random>

#include "noisegate/channels.hpp"
#include "noisegate/random.hpp"

namespace noisegate::testing {

inline std::mt19937_64 rng(std::uint64_t seed = 7) {
  return std::mt19937_64(seed);
}

inline Mat random_hermitian(int d, std::mt19937_64& gen) {
  const Mat g = complex_gaussian(d, d, gen);
  return 0.5 * (g + g.adjoint());
}

inline DensityOperator random_density(int d, std::mt19937_64& gen) {
  const Mat g = complex_gaussian(d, d, gen);
  Mat rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityOperator(rho);
}

inline QuantumChannel random_tp_channel(int d, int rank,
                                        std::mt19937_64& gen) {
  const Mat iso = haar_isometry(rank * d, d, gen);
  std::vector<Mat> kraus;
  for (int r = 0; r < rank; ++r) kraus.emplace_back(iso.block(r * d, 0, d, d));
  return QuantumChannel(CPMap(d, d, std::move(kraus)));
}

/// Largest entrywise deviation between the two maps' images of the matrix
/// units; the "same action" metric used throughout the tests.
inline double action_distance(const CPMap& a, const CPMap& b) {
  double dist = 0.0;
  for (const Mat& e : orthonormal_operator_basis(a.dim_in())) {
    dist = std::max(dist, (a.apply(e) - b.apply(e)).cwiseAbs().maxCoeff());
  }
  return dist;
}

}  // namespace noisegate::testing

#endif
