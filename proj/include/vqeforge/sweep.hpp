// Copyright 2026 VQE Forge contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "vqeforge/chem.hpp"
#include "vqeforge/pauli.hpp"
#include "vqeforge/vqe.hpp"

namespace vqeforge {

/// Scaling-study registers above this width trigger a warning.
inline constexpr std::uint32_t kScalingWarnQubits = 22;
/// Scaling-study registers above this width are refused unless forced.
inline constexpr std::uint32_t kScalingRefuseQubits = 26;

struct SweepConfig {
  double d_min = 0.1;   // angstrom
  double d_max = 3.0;   // angstrom
  int n_points = 100;
  int workers = 1;
  AdamConfig adam{};
};

struct SweepPoint {
  double bond_angstrom = 0.0;
  double energy_hartree = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> theta_star;
  int iterations = 0;
  double wall_seconds = 0.0;
  bool ok = false;
  std::string error;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepPoint> points;  // sorted by bond length
  std::vector<double> per_worker_seconds;
  double total_wall_seconds = 0.0;
  bool all_ok = true;
};

/// Uniform bond-length grid, endpoints included exactly; a single point
/// collapses to d_min.
inline std::vector<double> bond_grid(double d_min, double d_max,
                                     int n_points) {
  if (n_points < 1) throw std::invalid_argument("grid needs >= 1 point");
  if (d_max < d_min) throw std::invalid_argument("d_max < d_min");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n_points));
  if (n_points == 1) {
    grid.push_back(d_min);
    return grid;
  }
  const double span = d_max - d_min;
  for (int i = 0; i < n_points - 1; ++i) {
    grid.push_back(d_min + span * static_cast<double>(i) /
                               static_cast<double>(n_points - 1));
  }
  grid.push_back(d_max);
  return grid;
}

/**
 * Splits [0, n_items) into n_chunks contiguous [begin, end) ranges: the
 * first n_items % n_chunks chunks get ceil(n_items / n_chunks) items and
 * the rest get the floor, so sizes differ by at most one and chunks past
 * the item count come out empty.
 */
inline std::vector<std::pair<std::size_t, std::size_t>> split_chunks(
    std::size_t n_items, std::size_t n_chunks) {
  if (n_chunks == 0) throw std::invalid_argument("need >= 1 chunk");
  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  chunks.reserve(n_chunks);
  const std::size_t base = n_items / n_chunks;
  const std::size_t extra = n_items % n_chunks;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    const std::size_t len = base + (c < extra ? 1 : 0);
    chunks.emplace_back(begin, begin + len);
    begin += len;
  }
  return chunks;
}

/// Worker count after applying the VQE_FORGE_THREADS cap, when that
/// variable holds a positive integer.
inline int effective_workers(int requested) {
  if (requested < 1) throw std::invalid_argument("workers must be >= 1");
  const char* env = std::getenv("VQE_FORGE_THREADS");
  if (env == nullptr || *env == '\0') return requested;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || cap < 1) return requested;
  return static_cast<int>(std::min<long>(requested, cap));
}

/**
 * Scatter-gather bond-length sweep: the grid is split into contiguous
 * chunks, one per worker thread; each worker builds its own Hamiltonians
 * and runs VQE on its points, writing into disjoint slots of the shared
 * result vector. Identical inputs give identical energies for any worker
 * count. A failing point records its error and leaves the sweep running.
 */
inline SweepReport run_sweep(const SweepConfig& config) {
  if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> grid =
      bond_grid(config.d_min, config.d_max, config.n_points);

  SweepReport report;
  report.config = config;
  report.points.resize(grid.size());
  report.per_worker_seconds.assign(static_cast<std::size_t>(config.workers),
                                   0.0);

  const auto chunks =
      split_chunks(grid.size(), static_cast<std::size_t>(config.workers));
  const auto worker_body = [&](std::size_t w) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = chunks[w].first; i < chunks[w].second; ++i) {
      SweepPoint& point = report.points[i];
      point.bond_angstrom = grid[i];
      try {
        const QubitHamiltonian& h = build_h2_hamiltonian(grid[i]);
        const VqeResult r = run_vqe(h, AnsatzSpec::h2_double_excitation(),
                                    config.adam);
        point.energy_hartree = r.energy;
        point.theta_star = r.theta;
        point.iterations = r.iterations_run;
        point.wall_seconds = r.wall_seconds;
        point.ok = true;
      } catch (const std::exception& e) {
        point.ok = false;
        point.error = e.what();
      }
    }
    report.per_worker_seconds[w] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(config.workers));
  for (std::size_t w = 0; w < static_cast<std::size_t>(config.workers); ++w) {
    pool.emplace_back(worker_body, w);
  }
  for (auto& t : pool) t.join();

  for (const auto& p : report.points) report.all_ok = report.all_ok && p.ok;
  report.total_wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

/// speedup(p) = T(1) / T(p).
inline double measured_speedup(double t_serial, double t_parallel) {
  if (!(t_serial > 0.0) || !(t_parallel > 0.0)) {
    throw std::invalid_argument("speedup needs positive timings");
  }
  return t_serial / t_parallel;
}

/// efficiency(p) = speedup(p) / p.
inline double parallel_efficiency(double t_serial, double t_parallel,
                                  int workers) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  return measured_speedup(t_serial, t_parallel) / workers;
}

/// Amdahl's law: S(p) = 1 / (f + (1 - f) / p) for serial fraction f.
inline double amdahl_speedup(double serial_fraction, int workers) {
  if (!(serial_fraction >= 0.0 && serial_fraction <= 1.0)) {
    throw std::invalid_argument("serial fraction must lie in [0, 1]");
  }
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  return 1.0 / (serial_fraction + (1.0 - serial_fraction) / workers);
}

/**
 * Open-chain transverse-field Ising Hamiltonian
 *   H = -J sum_i Z_i Z_{i+1} - h sum_i X_i
 * used as the synthetic workload for wide registers.
 */
inline QubitHamiltonian build_tfim(std::uint32_t n_qubits, double coupling,
                                   double field) {
  std::vector<PauliTerm> terms;
  for (std::uint32_t q = 0; q + 1 < n_qubits; ++q) {
    terms.emplace_back(std::complex<double>{-coupling, 0.0},
                       std::vector<std::pair<std::uint32_t, PauliAxis>>{
                           {q, PauliAxis::Z}, {q + 1, PauliAxis::Z}});
  }
  for (std::uint32_t q = 0; q < n_qubits; ++q) {
    terms.emplace_back(std::complex<double>{-field, 0.0},
                       std::vector<std::pair<std::uint32_t, PauliAxis>>{
                           {q, PauliAxis::X}});
  }
  return canonicalize(QubitHamiltonian{n_qubits, std::move(terms)});
}

/// sum_i Z_i, whose ground state is |1...1> with energy -n. Useful as a
/// convergence sanity target for wide registers.
inline QubitHamiltonian build_z_sum(std::uint32_t n_qubits) {
  std::vector<PauliTerm> terms;
  for (std::uint32_t q = 0; q < n_qubits; ++q) {
    terms.emplace_back(std::complex<double>{1.0, 0.0},
                       std::vector<std::pair<std::uint32_t, PauliAxis>>{
                           {q, PauliAxis::Z}});
  }
  return canonicalize(QubitHamiltonian{n_qubits, std::move(terms)});
}

struct ScalingConfig {
  std::vector<std::uint32_t> qubits{4, 8, 12, 14, 16, 18, 20};
  std::uint32_t layers = 2;
  int iterations = 5;
  double learning_rate = 0.05;
  double coupling = 1.0;
  double field = 1.0;
  bool z_sum_mode = false;
  /// All RY angles start here; zero is a stationary point of the
  /// hardware-efficient ansatz on these diagonal-dominated models.
  double theta_init = 0.1;
  bool force = false;
};

struct ScalingRecord {
  std::uint32_t n_qubits = 0;
  std::uint64_t state_bytes = 0;
  double runtime_seconds = 0.0;
  double final_energy = 0.0;
  int iterations_run = 0;
};

/**
 * Runtime-versus-width study on the synthetic Hamiltonian: one VQE run
 * per register width with the hardware-efficient ansatz. Warns past 22
 * qubits and refuses past 26 unless forced (the state alone is 1 GiB at
 * 26 qubits).
 */
inline std::vector<ScalingRecord> run_scaling_study(
    const ScalingConfig& config) {
  for (const std::uint32_t n : config.qubits) {
    if (n < 2) throw std::invalid_argument("scaling study needs >= 2 qubits");
    if (n > kScalingRefuseQubits && !config.force) {
      throw std::invalid_argument(
          "refusing " + std::to_string(n) + " qubits (> " +
          std::to_string(kScalingRefuseQubits) +
          ", state alone exceeds 1 GiB); pass force to override");
    }
  }
  std::vector<ScalingRecord> records;
  records.reserve(config.qubits.size());
  for (const std::uint32_t n : config.qubits) {
    if (n > kScalingWarnQubits) {
      std::cerr << "warning: " << n << " qubits needs "
                << memory_estimate(n) / (1024.0 * 1024.0 * 1024.0)
                << " GiB of state\n";
    }
    const QubitHamiltonian h = config.z_sum_mode
                                   ? build_z_sum(n)
                                   : build_tfim(n, config.coupling,
                                                config.field);
    const AnsatzSpec spec = AnsatzSpec::hardware_efficient(config.layers);
    AdamConfig adam;
    adam.learning_rate = config.learning_rate;
    adam.max_iterations = config.iterations;
    const std::vector<double> init(n_parameters(spec, n), config.theta_init);

    const auto t0 = std::chrono::steady_clock::now();
    const VqeResult r = run_vqe(h, spec, adam, init);
    ScalingRecord rec;
    rec.n_qubits = n;
    rec.state_bytes = memory_estimate(n);
    rec.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    rec.final_energy = r.energy;
    rec.iterations_run = r.iterations_run;
    records.push_back(rec);
  }
  return records;
}

}  // namespace vqeforge
