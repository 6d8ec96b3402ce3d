/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/random.hpp"

#include <stdexcept>

namespace noisegate {

Mat complex_gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cxd(re, im);
    }
  }
  return g;
}

Mat haar_isometry(int rows, int cols, std::mt19937_64& rng) {
  if (rows < cols || cols < 1) {
    throw std::invalid_argument("haar_isometry: need rows >= cols >= 1");
  }
  const Mat g = complex_gaussian(rows, cols, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(rows, cols);
  const Mat r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int j = 0; j < cols; ++j) {
    const cxd diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

Mat haar_unitary(int d, std::mt19937_64& rng) {
  return haar_isometry(d, d, rng);
}

Vec haar_pure_state(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec v(d);
  for (int i = 0; i < d; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = cxd(re, im);
  }
  v.normalize();
  return v;
}

}  // namespace noisegate
