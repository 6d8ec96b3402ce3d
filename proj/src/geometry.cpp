/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace noisegate {

std::string to_string(const RegionLabel& label) {
  switch (label.kind) {
    case RegionLabel::Kind::octahedron:
      return "O";
    case RegionLabel::Kind::corner:
      return "T" + std::to_string(label.mu);
    case RegionLabel::Kind::boundary:
      return "boundary(T" + std::to_string(label.mu) + ",O)";
  }
  return "?";
}

Eigen::Matrix3d bloch_matrix(const CPMap& map) {
  if (map.dim_in() != 2 || map.dim_out() != 2) {
    throw std::invalid_argument("bloch_matrix: qubit maps only");
  }
  const auto& sigma = pauli_basis();
  Eigen::Matrix3d b;
  for (int j = 1; j <= 3; ++j) {
    const Mat image = map.apply(sigma[static_cast<std::size_t>(j)]);
    for (int i = 1; i <= 3; ++i) {
      b(i - 1, j - 1) =
          0.5 * (sigma[static_cast<std::size_t>(i)] * image).trace().real();
    }
  }
  return b;
}

namespace {

std::array<double, 4> corner_forms(const Eigen::Vector3d& d) {
  return {d(0) + d(1) + d(2), d(0) - d(1) - d(2), -d(0) + d(1) - d(2),
          -d(0) - d(1) + d(2)};
}

// SU(2) lift of a rotation matrix via quaternion extraction; the overall sign
// is fixed so the (0,0) entry has nonnegative real part.
Mat su2_from_rotation(const Eigen::Matrix3d& r) {
  double w, x, y, z;
  const double trace = r.trace();
  if (trace >= 0.0) {
    const double s = std::sqrt(trace + 1.0) * 2.0;
    w = 0.25 * s;
    x = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 2) - r(2, 0)) / s;
    z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
    const double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
    w = (r(2, 1) - r(1, 2)) / s;
    x = 0.25 * s;
    y = (r(0, 1) + r(1, 0)) / s;
    z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) > r(2, 2)) {
    const double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
    w = (r(0, 2) - r(2, 0)) / s;
    x = (r(0, 1) + r(1, 0)) / s;
    y = 0.25 * s;
    z = (r(1, 2) + r(2, 1)) / s;
  } else {
    const double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
    w = (r(1, 0) - r(0, 1)) / s;
    x = (r(0, 2) + r(2, 0)) / s;
    y = (r(1, 2) + r(2, 1)) / s;
    z = 0.25 * s;
  }
  bool flip = w < 0.0;
  if (w == 0.0) {
    if (x != 0.0) {
      flip = x < 0.0;
    } else if (y != 0.0) {
      flip = y < 0.0;
    } else {
      flip = z < 0.0;
    }
  }
  if (flip) {
    w = -w;
    x = -x;
    y = -y;
    z = -z;
  }
  // U = w 1 - i (x sigma_1 + y sigma_2 + z sigma_3)
  Mat u(2, 2);
  u(0, 0) = cxd(w, -z);
  u(0, 1) = cxd(-y, -x);
  u(1, 0) = cxd(y, -x);
  u(1, 1) = cxd(w, z);
  return u;
}

}  // namespace

bool in_tetrahedron(const Eigen::Vector3d& dvec, double tol) {
  for (double form : corner_forms(dvec)) {
    // alpha^mu = (1 + form)/4 must stay >= -tol
    if ((1.0 + form) / 4.0 < -tol) return false;
  }
  return true;
}

RegionLabel classify(const Eigen::Vector3d& dvec, double tol) {
  if (!in_tetrahedron(dvec, tol)) {
    throw std::invalid_argument("classify: dvec outside the tetrahedron T");
  }
  const auto forms = corner_forms(dvec);
  int mu = 0;
  for (int i = 1; i < 4; ++i) {
    if (forms[static_cast<std::size_t>(i)] > forms[static_cast<std::size_t>(mu)]) mu = i;
  }
  const double best = forms[static_cast<std::size_t>(mu)];
  RegionLabel label;
  if (best >= 1.0 + tol) {
    label.kind = RegionLabel::Kind::corner;
    label.mu = mu;
  } else if (best >= 1.0 - tol) {
    label.kind = RegionLabel::Kind::boundary;
    label.mu = mu;
  } else {
    label.kind = RegionLabel::Kind::octahedron;
    label.mu = -1;
  }
  return label;
}

UnitalQubitCanonical canonical_form(const QuantumChannel& n, double tol) {
  if (n.dim_in() != 2 || n.dim_out() != 2) {
    throw std::invalid_argument("canonical_form: qubit channels only");
  }
  if (!is_unital(n.base(), std::max(tol, kDefaultTol))) {
    throw std::invalid_argument("canonical_form: channel is not unital");
  }
  const Eigen::Matrix3d b = bloch_matrix(n.base());
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      b, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double det_u = svd.matrixU().determinant();
  const double det_v = svd.matrixV().determinant();
  Eigen::Matrix3d fix_u = Eigen::Matrix3d::Identity();
  fix_u(2, 2) = det_u;
  Eigen::Matrix3d fix_v = Eigen::Matrix3d::Identity();
  fix_v(2, 2) = det_v;

  const Eigen::Matrix3d r_out = svd.matrixU() * fix_u;          // R_V
  const Eigen::Matrix3d r_in = fix_v * svd.matrixV().transpose();  // R_U
  Eigen::Vector3d dvec = svd.singularValues();
  dvec(2) *= det_u * det_v;

  UnitalQubitCanonical canonical;
  canonical.dvec = dvec;
  canonical.u_in = su2_from_rotation(r_in);
  canonical.u_out = su2_from_rotation(r_out);
  return canonical;
}

const std::vector<SymmetryTransform>& symmetry_group() {
  static const std::vector<SymmetryTransform> group = [] {
    const auto& sigma = pauli_basis();
    const Mat id2 = Mat::Identity(2, 2);
    const double c = std::numbers::sqrt2 / 2.0;

    std::vector<SymmetryTransform> generators;
    SymmetryTransform identity;
    identity.action = Eigen::Matrix3d::Identity();
    identity.u = id2;
    identity.v = id2;
    generators.push_back(identity);
    for (int i = 1; i <= 3; ++i) {
      // (U, V) = (1, sigma_i): flips the signs of the other two axes.
      SymmetryTransform flip;
      flip.action = -Eigen::Matrix3d::Identity();
      flip.action(i - 1, i - 1) = 1.0;
      flip.u = id2;
      flip.v = sigma[static_cast<std::size_t>(i)];
      generators.push_back(flip);

      // (U, V) = (e^{i pi sigma_i/4}, e^{-i pi sigma_i/4}): swaps the other
      // two axes.
      SymmetryTransform swap;
      swap.action = Eigen::Matrix3d::Zero();
      const int a = (i % 3);      // zero-based indices of the other two axes
      const int b = ((i + 1) % 3);
      swap.action(i - 1, i - 1) = 1.0;
      swap.action(a, b) = 1.0;
      swap.action(b, a) = 1.0;
      swap.u = c * (id2 + cxd(0.0, 1.0) * sigma[static_cast<std::size_t>(i)]);
      swap.v = c * (id2 - cxd(0.0, 1.0) * sigma[static_cast<std::size_t>(i)]);
      generators.push_back(swap);
    }

    auto key_of = [](const Eigen::Matrix3d& a) {
      std::array<int, 9> key{};
      for (int r = 0; r < 3; ++r) {
        for (int col = 0; col < 3; ++col) {
          key[static_cast<std::size_t>(3 * r + col)] =
              static_cast<int>(std::lround(a(r, col)));
        }
      }
      return key;
    };

    std::vector<SymmetryTransform> closure;
    std::vector<std::array<int, 9>> seen;
    auto insert = [&](const SymmetryTransform& t) {
      const auto key = key_of(t.action);
      for (const auto& k : seen) {
        if (k == key) return false;
      }
      seen.push_back(key);
      closure.push_back(t);
      return true;
    };

    insert(identity);
    // Breadth-first closure under composition; second transform applied after
    // the first composes as action2*action1 with pair (u1 u2, v2 v1).
    bool grew = true;
    while (grew) {
      grew = false;
      const std::size_t count = closure.size();
      for (std::size_t i = 0; i < count; ++i) {
        for (const SymmetryTransform& g : generators) {
          SymmetryTransform next;
          next.action = g.action * closure[i].action;
          next.u = closure[i].u * g.u;
          next.v = g.v * closure[i].v;
          if (insert(next)) grew = true;
        }
      }
    }

    const std::array<Eigen::Vector3d, 4> vertices = {
        Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(1, -1, -1),
        Eigen::Vector3d(-1, 1, -1), Eigen::Vector3d(-1, -1, 1)};
    for (SymmetryTransform& t : closure) {
      for (int mu = 0; mu < 4; ++mu) {
        const Eigen::Vector3d image =
            t.action * vertices[static_cast<std::size_t>(mu)];
        int match = -1;
        for (int nu = 0; nu < 4; ++nu) {
          if ((image - vertices[static_cast<std::size_t>(nu)]).norm() < 1e-9) {
            match = nu;
            break;
          }
        }
        if (match < 0) {
          throw std::logic_error("symmetry_group: action does not permute E_mu");
        }
        t.vertex_perm[static_cast<std::size_t>(mu)] = match;
      }
    }
    return closure;
  }();
  return group;
}

OptimalPrediction predict_optimum(const QuantumChannel& n, double tol) {
  if (n.family().kind == NoiseFamilyKind::depolarizing) {
    const int d = n.dim();
    const double eps = n.family().eps;
    const double f_dn = 1.0 - eps * (d - 1.0) / d;
    const double f_dr = 2.0 / (d + 1.0);
    if (f_dn >= f_dr) {
      return OptimalPrediction{do_nothing(d), f_dn, "do_nothing"};
    }
    return OptimalPrediction{discriminate_reprepare(d), f_dr,
                             "discriminate_reprepare"};
  }
  if (n.dim_in() != 2 || n.dim_out() != 2 || !is_unital(n.base(), tol)) {
    throw std::invalid_argument(
        "predict_optimum: covered noise is unital qubit or depolarizing");
  }
  const UnitalQubitCanonical canonical = canonical_form(n, tol);
  const RegionLabel label = classify(canonical.dvec, tol);
  if (label.kind == RegionLabel::Kind::corner) {
    const double sum_abs = canonical.dvec.cwiseAbs().sum();
    // Undo the input frame, then recover with sigma_mu in the output frame:
    // branch A_{U^dag}, recovery A_{sigma_mu V^dag}.
    const Mat& sigma = pauli_basis()[static_cast<std::size_t>(label.mu)];
    const Mat branch = canonical.u_in.adjoint();
    const Mat recovery = sigma * canonical.u_out.adjoint();
    Protocol protocol({{CPMap(2, 2, {branch}),
                        QuantumChannel(CPMap(2, 2, {recovery}))}});
    return OptimalPrediction{std::move(protocol), 0.5 + sum_abs / 6.0,
                             "no_measurement"};
  }
  return OptimalPrediction{discriminate_reprepare(2), 2.0 / 3.0,
                           "discriminate_reprepare"};
}

}  // namespace noisegate
