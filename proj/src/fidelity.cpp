/*
 * (C) Copyright 2026 the noisegate authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "noisegate/fidelity.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "noisegate/random.hpp"

namespace noisegate {

double pure_fidelity(const DensityOperator& rho, const PureState& psi) {
  if (rho.dim() != psi.dim()) {
    throw std::invalid_argument("pure_fidelity: dimension mismatch");
  }
  return (psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes())(0, 0)
      .real();
}

FidelityReport average_fidelity(const QuantumChannel& e) {
  if (!e.base().is_square()) {
    throw std::invalid_argument("average_fidelity: channel must be square");
  }
  const double d = e.dim();
  FidelityReport report;
  report.value = (d + hs_trace(e.base())) / (d * (d + 1.0));
  report.method = FidelityMethod::formula;
  return report;
}

namespace {

constexpr long long kMcChunk = 8192;

struct ChunkStats {
  double sum = 0.0;
  double sum_sq = 0.0;
};

ChunkStats mc_chunk(const QuantumChannel& e, long long count,
                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int d = e.dim();
  ChunkStats stats;
  Vec image(d);
  for (long long s = 0; s < count; ++s) {
    const Vec psi = haar_pure_state(d, rng);
    // <psi| E(|psi><psi|) |psi> = sum_k |<psi| K_k |psi>|^2
    double value = 0.0;
    for (const Mat& k : e.kraus()) {
      image.noalias() = k * psi;
      value += std::norm(psi.dot(image));
    }
    stats.sum += value;
    stats.sum_sq += value * value;
  }
  return stats;
}

}  // namespace

FidelityReport average_fidelity_mc(const QuantumChannel& e, long long n,
                                   std::uint64_t seed, int threads) {
  if (!e.base().is_square()) {
    throw std::invalid_argument("average_fidelity_mc: channel must be square");
  }
  if (n < 1) {
    throw std::invalid_argument("average_fidelity_mc: need n >= 1");
  }
  const long long n_chunks = (n + kMcChunk - 1) / kMcChunk;
  std::vector<ChunkStats> chunks(static_cast<std::size_t>(n_chunks));

  int pool = threads > 0 ? threads
                         : static_cast<int>(std::thread::hardware_concurrency());
  if (pool < 1) pool = 1;
  pool = static_cast<int>(std::min<long long>(pool, n_chunks));

  std::atomic<long long> next{0};
  auto work = [&] {
    for (;;) {
      const long long c = next.fetch_add(1);
      if (c >= n_chunks) return;
      const long long count = std::min(kMcChunk, n - c * kMcChunk);
      chunks[static_cast<std::size_t>(c)] =
          mc_chunk(e, count, seed + static_cast<std::uint64_t>(c));
    }
  };
  if (pool == 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t) workers.emplace_back(work);
    for (std::thread& w : workers) w.join();
  }

  double sum = 0.0;
  double sum_sq = 0.0;
  for (const ChunkStats& c : chunks) {
    sum += c.sum;
    sum_sq += c.sum_sq;
  }
  const double mean = sum / static_cast<double>(n);
  double variance = 0.0;
  if (n > 1) {
    variance = (sum_sq - static_cast<double>(n) * mean * mean) /
               static_cast<double>(n - 1);
    variance = std::max(variance, 0.0);
  }
  FidelityReport report;
  report.value = mean;
  report.method = FidelityMethod::monte_carlo;
  report.n_samples = n;
  report.std_error = std::sqrt(variance / static_cast<double>(n));
  return report;
}

FidelityReport protocol_fidelity(const Protocol& p,
                                 const QuantumChannel& noise) {
  return average_fidelity(average_operation(p, noise));
}

AppendixDecomposition appendix_decompose(const Protocol& p, int axis) {
  if (p.dim() != 2) {
    throw std::invalid_argument("appendix_decompose: qubit protocols only");
  }
  if (axis < 1 || axis > 3) {
    throw std::invalid_argument("appendix_decompose: axis must lie in 1..3");
  }
  const auto& sigma = pauli_basis();
  const Mat& sigma_axis = sigma[static_cast<std::size_t>(axis)];
  const Mat id2 = Mat::Identity(2, 2);

  auto pauli_components = [&](const Mat& x, double& scalar,
                              Eigen::Vector3d& vec) {
    scalar = 0.5 * x.trace().real();
    for (int j = 1; j <= 3; ++j) {
      vec(j - 1) =
          0.5 * (sigma[static_cast<std::size_t>(j)] * x).trace().real();
    }
  };

  AppendixDecomposition result;
  result.outcomes.reserve(static_cast<std::size_t>(p.outcomes()));
  for (int omega = 1; omega <= p.outcomes(); ++omega) {
    const CPMap branch_dual = dual(p.branch(omega));
    const CPMap& recovery = p.recovery(omega).base();

    OutcomeDecomposition out;
    double one_component = 0.0;
    pauli_components(recovery.apply(id2), one_component, out.a);
    double b_scalar = 0.0;
    pauli_components(recovery.apply(sigma_axis), b_scalar, out.b);
    pauli_components(branch_dual.apply(id2), out.gamma, out.delta);
    pauli_components(branch_dual.apply(sigma_axis), out.epsilon, out.zeta);
    out.f = out.gamma + out.a.dot(out.delta) + out.b.dot(out.zeta);
    result.f_total += out.f;
    result.outcomes.push_back(out);
  }
  return result;
}

}  // namespace noisegate
