/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef NOISEGATE_RANDOM_HPP
#define NOISEGATE_RANDOM_HPP

#include <random>

#include "noisegate/operators.hpp"

namespace noisegate {

/// Matrix with i.i.d. standard complex Gaussian entries.
Mat complex_gaussian(int rows, int cols, std::mt19937_64& rng);

/// Haar-distributed isometry (rows >= cols): QR of a Gaussian matrix with the
/// usual phase correction on the R diagonal.
Mat haar_isometry(int rows, int cols, std::mt19937_64& rng);

/// Haar-distributed unitary on C^d.
Mat haar_unitary(int d, std::mt19937_64& rng);

/// Haar-distributed unit vector (normalized complex Gaussian).
Vec haar_pure_state(int d, std::mt19937_64& rng);

}  // namespace noisegate

#endif
