/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/verify.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "noisegate/geometry.hpp"
#include "noisegate/noise_models.hpp"
#include "noisegate/optimizer.hpp"
#include "noisegate/random.hpp"
#include "noisegate/separability.hpp"

namespace noisegate {

namespace {

struct Collector {
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> messages;

  void require(bool ok, const std::string& message) {
    ++checked;
    if (ok) return;
    ++failed;
    if (messages.size() < 8) messages.push_back(message);
  }

  CheckResult finish(const std::string& name, const std::string& extra = {}) {
    CheckResult result;
    result.name = name;
    result.passed = failed == 0;
    std::ostringstream detail;
    detail << checked << " sub-checks";
    if (failed > 0) detail << ", " << failed << " failed";
    if (!extra.empty()) detail << "; " << extra;
    for (const std::string& m : messages) detail << " | " << m;
    result.detail = detail.str();
    return result;
  }
};

std::mt19937_64 seeded_rng(const VerifyOptions& options, int salt) {
  return std::mt19937_64(options.seed +
                         0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(salt));
}

QuantumChannel random_tp_channel(int d, int rank, std::mt19937_64& rng) {
  const Mat iso = haar_isometry(rank * d, d, rng);
  std::vector<Mat> kraus;
  kraus.reserve(static_cast<std::size_t>(rank));
  for (int r = 0; r < rank; ++r) {
    kraus.emplace_back(iso.block(r * d, 0, d, d));
  }
  return QuantumChannel(CPMap(d, d, std::move(kraus)));
}

std::vector<PureState> random_basis(int d, std::mt19937_64& rng) {
  const Mat u = haar_unitary(d, rng);
  std::vector<PureState> basis;
  basis.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) basis.emplace_back(Vec(u.col(i)));
  return basis;
}

std::array<double, 4> random_simplex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::array<double, 4> alpha{};
  double sum = 0.0;
  for (double& a : alpha) {
    a = -std::log(std::max(uniform(rng), 1e-300));
    sum += a;
  }
  for (double& a : alpha) a /= sum;
  return alpha;
}

Protocol random_valid_protocol(int d, std::mt19937_64& rng, int max_outcomes,
                               int max_rank) {
  std::uniform_int_distribution<int> outcomes(1, max_outcomes);
  std::uniform_int_distribution<int> rank(1, max_rank);
  OptimizerConfig cfg;
  cfg.n_outcomes = outcomes(rng);
  cfg.kraus_rank = rank(rng);
  return random_protocol(d, cfg, rng());
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(double value) {
  std::ostringstream s;
  s.precision(12);
  s << value;
  return s.str();
}

// 1. |formula - MC(1e5)| <= 4 standard errors on random TP channels.
CheckResult check_fidelity_formula(const VerifyOptions& options) {
  auto rng = seeded_rng(options, 1);
  const auto start = std::chrono::steady_clock::now();
  Collector c;
  constexpr long long kSamples = 100000;
  auto run = [&](int d, int count) {
    for (int i = 0; i < count; ++i) {
      const QuantumChannel channel = random_tp_channel(d, 1 + (i % 3), rng);
      const double formula = average_fidelity(channel).value;
      const FidelityReport mc =
          average_fidelity_mc(channel, kSamples, rng(), options.threads);
      const double band = 4.0 * mc.std_error + 1e-12;
      c.require(std::abs(formula - mc.value) <= band,
                "d=" + std::to_string(d) + " channel " + std::to_string(i) +
                    ": |" + fmt(formula) + " - " + fmt(mc.value) + "| > 4 se");
    }
  };
  run(2, 20);
  run(3, 10);
  const double seconds = elapsed_seconds(start);
  c.require(seconds < 30.0, "runtime " + fmt(seconds) + " s exceeds 30 s");
  return c.finish("fidelity-formula-vs-monte-carlo",
                  fmt(seconds) + " s for 30 channels x 1e5 samples");
}

// 2. The reprepare protocol yields 2/(d+1) for every noise and basis.
CheckResult check_reprepare_universality(const VerifyOptions& options) {
  auto rng = seeded_rng(options, 2);
  Collector c;
  for (int d = 2; d <= 5; ++d) {
    const double expected = 2.0 / (d + 1.0);
    for (int i = 0; i < 10; ++i) {
      const QuantumChannel noise = random_tp_channel(d, d, rng);
      for (int b = 0; b < 3; ++b) {
        const Protocol dr = discriminate_reprepare(random_basis(d, rng));
        const double fbar = protocol_fidelity(dr, noise).value;
        c.require(std::abs(fbar - expected) <= 1e-12,
                  "d=" + std::to_string(d) + ": " + fmt(fbar) +
                      " != " + fmt(expected));
      }
    }
  }
  return c.finish("reprepare-universality");
}

// 3. Depolarizing phase diagram: predicted optimum max(1-eps(d-1)/d, 2/(d+1))
// with crossover at eps = d/(d+1); the see-saw reaches it and never beats it.
CheckResult check_depolarizing_phase_diagram(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Collector c;
  for (int d = 2; d <= 4; ++d) {
    const double eps_star = static_cast<double>(d) / (d + 1.0);
    c.require(std::abs((1.0 - eps_star * (d - 1.0) / d) - 2.0 / (d + 1.0)) <=
                  1e-12,
              "d=" + std::to_string(d) + ": formulas differ at the crossover");
    for (int step = 0; step <= 10; ++step) {
      const double eps = step / 10.0;
      const QuantumChannel noise = depolarizing(d, eps);
      const double f_dn = 1.0 - eps * (d - 1.0) / d;
      const double f_dr = 2.0 / (d + 1.0);
      const double predicted = std::max(f_dn, f_dr);
      const OptimalPrediction prediction = predict_optimum(noise);
      c.require(std::abs(prediction.fbar - predicted) <= 1e-12,
                "predict_optimum mismatch at d=" + std::to_string(d) +
                    " eps=" + fmt(eps));
      const bool expect_do_nothing = eps < eps_star - 1e-12;
      if (expect_do_nothing) {
        c.require(prediction.protocol_name == "do_nothing",
                  "weak-noise protocol at eps=" + fmt(eps));
      }

      OptimizerConfig cfg;
      cfg.n_outcomes = d;
      cfg.kraus_rank = 2;
      cfg.restarts = 20;
      cfg.seed = options.seed + static_cast<std::uint64_t>(1000 * d + step);
      cfg.threads = options.threads;
      const OptimizationResult result = optimize(noise, cfg);
      c.require(result.best_fbar <= predicted + 1e-9,
                "optimizer beat the optimum at d=" + std::to_string(d) +
                    " eps=" + fmt(eps) + ": " + fmt(result.best_fbar) + " > " +
                    fmt(predicted));
      c.require(result.best_fbar >= predicted - 1e-3,
                "optimizer missed the optimum at d=" + std::to_string(d) +
                    " eps=" + fmt(eps) + ": " + fmt(result.best_fbar) +
                    " < " + fmt(predicted));
    }
  }
  const double seconds = elapsed_seconds(start);
  c.require(seconds < 600.0, "runtime " + fmt(seconds) + " s exceeds 600 s");
  return c.finish("depolarizing-phase-diagram", fmt(seconds) + " s");
}

// 4. Unital-qubit phase diagram on random tetrahedron points.
CheckResult check_unital_phase_diagram(const VerifyOptions& options) {
  auto rng = seeded_rng(options, 4);
  const auto start = std::chrono::steady_clock::now();
  Collector c;
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<Eigen::Vector3d> octahedron_points;
  std::vector<Eigen::Vector3d> corner_points;
  while (octahedron_points.size() < 25 || corner_points.size() < 25) {
    const Eigen::Vector3d dvec(coord(rng), coord(rng), coord(rng));
    if (!in_tetrahedron(dvec, 0.0)) continue;
    const double sum_abs = dvec.cwiseAbs().sum();
    if (std::abs(sum_abs - 1.0) <= 1e-6) continue;  // stay off the interface
    if (sum_abs < 1.0 && octahedron_points.size() < 25) {
      octahedron_points.push_back(dvec);
    } else if (sum_abs > 1.0 && corner_points.size() < 25) {
      corner_points.push_back(dvec);
    }
  }

  std::vector<Eigen::Vector3d> points = octahedron_points;
  points.insert(points.end(), corner_points.begin(), corner_points.end());
  int index = 0;
  for (const Eigen::Vector3d& dvec : points) {
    const QuantumChannel noise =
        unital_from_canonical({dvec(0), dvec(1), dvec(2)});
    const double sum_abs = dvec.cwiseAbs().sum();
    const double f_nm = 0.5 + sum_abs / 6.0;
    const double f_dr = 2.0 / 3.0;
    const double predicted = std::max(f_nm, f_dr);

    const OptimalPrediction prediction = predict_optimum(noise);
    c.require(std::abs(prediction.fbar - predicted) <= 1e-12,
              "prediction formula mismatch at point " + std::to_string(index));
    const double achieved =
        protocol_fidelity(prediction.protocol, noise).value;
    c.require(std::abs(achieved - prediction.fbar) <= 1e-10,
              "predicted protocol does not achieve its fidelity at point " +
                  std::to_string(index));

    const RegionLabel label = classify(canonical_form(noise).dvec);
    const bool corner_expected = sum_abs > 1.0;
    c.require((label.kind == RegionLabel::Kind::corner) == corner_expected &&
                  label.kind != RegionLabel::Kind::boundary,
              "classify disagrees with the fidelity argmax at point " +
                  std::to_string(index));

    double best = 0.0;
    for (int m = 2; m <= 3; ++m) {
      OptimizerConfig cfg;
      cfg.n_outcomes = m;
      cfg.kraus_rank = 2;
      cfg.restarts = 20;
      cfg.seed = options.seed + static_cast<std::uint64_t>(100 * index + m);
      cfg.threads = options.threads;
      best = std::max(best, optimize(noise, cfg).best_fbar);
    }
    c.require(best <= predicted + 1e-9,
              "optimizer beat the optimum at point " + std::to_string(index) +
                  ": " + fmt(best) + " > " + fmt(predicted));
    c.require(best >= predicted - 1e-3,
              "optimizer missed the optimum at point " +
                  std::to_string(index) + ": " + fmt(best) + " < " +
                  fmt(predicted));
    ++index;
  }
  const double seconds = elapsed_seconds(start);
  return c.finish("unital-qubit-phase-diagram", fmt(seconds) + " s");
}

// 5. Dephasing noise: both classical protocols give exactly 2/3, and the
// per-outcome decomposition obeys every bound, summing to at most 2.
CheckResult check_dephasing_appendix(const VerifyOptions& options) {
  auto rng = seeded_rng(options, 5);
  Collector c;
  for (int axis = 1; axis <= 3; ++axis) {
    const QuantumChannel noise = edge_midpoint(0, axis);
    const double f_dn = protocol_fidelity(do_nothing(2), noise).value;
    const double f_dr = protocol_fidelity(discriminate_reprepare(2), noise).value;
    c.require(std::abs(f_dn - 2.0 / 3.0) <= 1e-12,
              "do_nothing != 2/3 on axis " + std::to_string(axis));
    c.require(std::abs(f_dr - 2.0 / 3.0) <= 1e-12,
              "reprepare != 2/3 on axis " + std::to_string(axis));

    for (int trial = 0; trial < 200; ++trial) {
      const Protocol p = random_valid_protocol(2, rng, 4, 2);
      const AppendixDecomposition decomposition = appendix_decompose(p, axis);
      double gamma_sum = 0.0;
      for (const OutcomeDecomposition& o : decomposition.outcomes) {
        gamma_sum += o.gamma;
        c.require((o.a + o.b).norm() <= 1.0 + 1e-9 &&
                      (o.a - o.b).norm() <= 1.0 + 1e-9,
                  "|a +- b| bound failed");
        c.require((o.delta + o.zeta).norm() <= o.gamma + o.epsilon + 1e-9,
                  "|delta + zeta| bound failed");
        c.require((o.delta - o.zeta).norm() <= o.gamma - o.epsilon + 1e-9,
                  "|delta - zeta| bound failed");
        c.require(o.f <= 2.0 * o.gamma + 1e-9, "f_omega > 2 gamma_omega");
      }
      c.require(std::abs(gamma_sum - 1.0) <= 1e-9, "sum gamma != 1");
      c.require(decomposition.f_total <= 2.0 + 1e-9, "sum f_omega > 2");
    }
  }
  return c.finish("dephasing-appendix-bounds");
}

// 6. Entanglement breaking iff inside the octahedron, and the depolarizing
// PPT eigenvalue changes sign exactly at eps = d/(d+1).
CheckResult check_eb_octahedron(const VerifyOptions& options) {
  auto rng = seeded_rng(options, 6);
  Collector c;
  int used = 0;
  while (used < 200) {
    const PauliMixture mixture(random_simplex(rng));
    const auto coords = mixture.canonical_coordinates();
    const double sum_abs =
        std::abs(coords[0]) + std::abs(coords[1]) + std::abs(coords[2]);
    if (std::abs(sum_abs - 1.0) <= 1e-9) continue;  // boundary band excluded
    const QcqVerdict verdict = is_qcq(pauli_channel(mixture));
    c.require(verdict.status != QcqStatus::undecided,
              "qubit verdict must be decisive");
    const bool eb = verdict.status == QcqStatus::entanglement_breaking;
    c.require(eb == (sum_abs < 1.0),
              "EB/octahedron mismatch at sum|d| = " + fmt(sum_abs));
    ++used;
  }

  for (int d = 2; d <= 3; ++d) {
    auto min_pt_eig = [&](double eps) {
      return ppt_check(to_choi(depolarizing(d, eps).base())).second;
    };
    double lo = 0.0, hi = 1.0;
    c.require(min_pt_eig(lo) < 0.0 && min_pt_eig(hi) > 0.0,
              "PPT eigenvalue endpoints have unexpected signs");
    for (int iter = 0; iter < 80; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (min_pt_eig(mid) < 0.0 ? lo : hi) = mid;
    }
    const double threshold = static_cast<double>(d) / (d + 1.0);
    c.require(std::abs(0.5 * (lo + hi) - threshold) <= 1e-10,
              "PPT sign change at " + fmt(0.5 * (lo + hi)) + ", expected " +
                  fmt(threshold));
  }
  return c.finish("eb-octahedron-equivalence");
}

// 7. protocol_fidelity is affine in the noise.
CheckResult check_noise_affinity(const VerifyOptions& options) {
  auto rng = seeded_rng(options, 7);
  Collector c;
  for (int d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      const Protocol p = random_valid_protocol(d, rng, 3, 2);
      const QuantumChannel n1 = random_tp_channel(d, 2, rng);
      const QuantumChannel n2 = random_tp_channel(d, 2, rng);
      const double f1 = protocol_fidelity(p, n1).value;
      const double f2 = protocol_fidelity(p, n2).value;
      for (double a : {0.25, 0.5, 0.75}) {
        const QuantumChannel mixed = mix({{1.0 - a, n1}, {a, n2}});
        const double f_mix = protocol_fidelity(p, mixed).value;
        c.require(std::abs(f_mix - ((1.0 - a) * f1 + a * f2)) <= 1e-10,
                  "affinity violated at d=" + std::to_string(d) +
                      " a=" + fmt(a));
      }
    }
  }
  return c.finish("noise-affinity");
}

// 8. Canonical form reconstructs the channel; the symmetry group closes with
// 24 elements, realizes its actions, and permutes the regions correctly.
CheckResult check_canonical_geometry(const VerifyOptions& options) {
  auto rng = seeded_rng(options, 8);
  Collector c;
  const auto basis = orthonormal_operator_basis(2);

  auto action_distance = [&](const CPMap& lhs, const CPMap& rhs) {
    double dist = 0.0;
    for (const Mat& e : basis) {
      dist = std::max(dist,
                      (lhs.apply(e) - rhs.apply(e)).cwiseAbs().maxCoeff());
    }
    return dist;
  };

  for (int trial = 0; trial < 100; ++trial) {
    const QuantumChannel core = pauli_channel(PauliMixture(random_simplex(rng)));
    const Mat u = haar_unitary(2, rng);
    const Mat v = haar_unitary(2, rng);
    const CPMap channel =
        compose(CPMap(2, 2, {v}), compose(core.base(), CPMap(2, 2, {u})));
    const QuantumChannel unital_channel{channel};

    const UnitalQubitCanonical canonical = canonical_form(unital_channel);
    c.require(in_tetrahedron(canonical.dvec, 1e-8),
              "canonical dvec left the tetrahedron");
    const QuantumChannel diag = unital_from_canonical(
        {canonical.dvec(0), canonical.dvec(1), canonical.dvec(2)}, 1e-8);
    const CPMap rebuilt =
        compose(CPMap(2, 2, {canonical.u_out}),
                compose(diag.base(), CPMap(2, 2, {canonical.u_in})));
    c.require(action_distance(channel, rebuilt) <= 1e-8,
              "reconstruction error above 1e-8 at trial " +
                  std::to_string(trial));
  }

  const auto& group = symmetry_group();
  c.require(group.size() == 24,
            "group has " + std::to_string(group.size()) + " elements");
  for (const SymmetryTransform& g : group) {
    for (const SymmetryTransform& h : group) {
      const Eigen::Matrix3d product = g.action * h.action;
      bool found = false;
      for (const SymmetryTransform& k : group) {
        if ((product - k.action).cwiseAbs().maxCoeff() < 1e-9) {
          found = true;
          break;
        }
      }
      c.require(found, "composition left the group");
      if (!found) break;
    }
  }

  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  int sampled = 0;
  while (sampled < 10) {
    const Eigen::Vector3d dvec(coord(rng), coord(rng), coord(rng));
    if (!in_tetrahedron(dvec, 0.0)) continue;
    ++sampled;
    const QuantumChannel diag =
        unital_from_canonical({dvec(0), dvec(1), dvec(2)});
    for (const SymmetryTransform& g : group) {
      const CPMap transformed =
          compose(CPMap(2, 2, {g.v}), compose(diag.base(), CPMap(2, 2, {g.u})));
      const Eigen::Vector3d mapped = g.action * dvec;
      const Eigen::Matrix3d bloch = bloch_matrix(transformed);
      c.require((bloch - Eigen::Matrix3d(mapped.asDiagonal()))
                        .cwiseAbs()
                        .maxCoeff() <= 1e-12,
                "unitary pair does not realize its signed permutation");
      const RegionLabel before = classify(dvec);
      const RegionLabel after = classify(mapped);
      c.require(before.kind == after.kind,
                "region kind changed under a symmetry");
      if (before.kind == RegionLabel::Kind::corner) {
        c.require(after.mu ==
                      g.vertex_perm[static_cast<std::size_t>(before.mu)],
                  "corner label did not follow the vertex permutation");
      }
    }
  }

  std::array<bool, 4> reached{};
  for (const SymmetryTransform& g : group) reached[static_cast<std::size_t>(g.vertex_perm[0])] = true;
  c.require(reached[0] && reached[1] && reached[2] && reached[3],
            "group does not act transitively on the corners");
  return c.finish("canonical-geometry");
}

}  // namespace

int check_count() { return 8; }

std::string check_name(int index) {
  switch (index) {
    case 1: return "fidelity-formula-vs-monte-carlo";
    case 2: return "reprepare-universality";
    case 3: return "depolarizing-phase-diagram";
    case 4: return "unital-qubit-phase-diagram";
    case 5: return "dephasing-appendix-bounds";
    case 6: return "eb-octahedron-equivalence";
    case 7: return "noise-affinity";
    case 8: return "canonical-geometry";
    default: throw std::invalid_argument("check_name: index out of range");
  }
}

CheckResult run_check(int index, const VerifyOptions& options) {
  switch (index) {
    case 1: return check_fidelity_formula(options);
    case 2: return check_reprepare_universality(options);
    case 3: return check_depolarizing_phase_diagram(options);
    case 4: return check_unital_phase_diagram(options);
    case 5: return check_dephasing_appendix(options);
    case 6: return check_eb_octahedron(options);
    case 7: return check_noise_affinity(options);
    case 8: return check_canonical_geometry(options);
    default: throw std::invalid_argument("run_check: index out of range");
  }
}

std::vector<int> suite_checks(const std::string& suite) {
  if (suite == "theorem1") return {3};
  if (suite == "theorem2") return {4};
  if (suite == "appendix") return {5};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8};
  throw std::invalid_argument("unknown suite '" + suite +
                              "' (theorem1, theorem2, appendix, all)");
}

int run_suite(const std::string& suite, const VerifyOptions& options,
              std::ostream& out) {
  bool all_passed = true;
  for (int index : suite_checks(suite)) {
    const CheckResult result = run_check(index, options);
    all_passed = all_passed && result.passed;
    out << (result.passed ? "[PASS] " : "[FAIL] ") << index << ". "
        << result.name << ": " << result.detail << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace noisegate
