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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vqeforge/chem.hpp"
#include "vqeforge/pauli.hpp"
#include "vqeforge/report.hpp"
#include "vqeforge/sweep.hpp"
#include "vqeforge/version.hpp"
#include "vqeforge/vqe.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& flag) {
  std::vector<int> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v < 1) {
      throw std::invalid_argument(flag + ": '" + item +
                                  "' is not a positive integer");
    }
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument(flag + ": empty list");
  return values;
}

void write_outputs(const std::string& out_dir, const std::string& stem,
                   const std::string& csv, const json& full) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  vqeforge::write_text_file((dir / (stem + ".csv")).string(), csv);
  vqeforge::write_text_file((dir / (stem + ".json")).string(),
                            full.dump(2) + "\n");
}

struct PesOptions {
  double d_min = 0.1;
  double d_max = 3.0;
  int points = 100;
  int iterations = 200;
  double learning_rate = 0.01;
  std::optional<double> tolerance;
  int workers = 1;
  std::string out_dir = ".";
};

int run_pes(const PesOptions& opt) {
  vqeforge::SweepConfig config;
  config.d_min = opt.d_min;
  config.d_max = opt.d_max;
  config.n_points = opt.points;
  config.workers = vqeforge::effective_workers(opt.workers);
  config.adam.learning_rate = opt.learning_rate;
  config.adam.max_iterations = opt.iterations;
  config.adam.gradient_tolerance = opt.tolerance;

  vqeforge::RunManifest manifest;
  manifest.command = "pes";
  manifest.config = json{{"d_min", opt.d_min},
                         {"d_max", opt.d_max},
                         {"points", opt.points},
                         {"iterations", opt.iterations},
                         {"learning_rate", opt.learning_rate},
                         {"tolerance", opt.tolerance ? json(*opt.tolerance)
                                                     : json(nullptr)},
                         {"workers_requested", opt.workers},
                         {"workers", config.workers},
                         {"out_dir", opt.out_dir}};
  manifest.started_at = vqeforge::iso8601_utc_now();
  const vqeforge::SweepReport report = vqeforge::run_sweep(config);
  manifest.finished_at = vqeforge::iso8601_utc_now();

  write_outputs(opt.out_dir, "pes", vqeforge::pes_csv(report),
                vqeforge::pes_json(manifest, report));

  const vqeforge::SweepPoint* best = nullptr;
  int failures = 0;
  for (const auto& p : report.points) {
    if (!p.ok) {
      ++failures;
      continue;
    }
    if (best == nullptr || p.energy_hartree < best->energy_hartree) best = &p;
  }
  if (best != nullptr) {
    std::printf(
        "equilibrium estimate: d = %.6f angstrom, E = %.6f hartree "
        "(grid argmin over %zu points, %d workers, %.3f s)\n",
        best->bond_angstrom, best->energy_hartree, report.points.size(),
        config.workers, report.total_wall_seconds);
  }
  if (failures > 0) {
    std::cerr << failures << " of " << report.points.size()
              << " sweep points failed; see pes.json for details\n";
    return 1;
  }
  return 0;
}

struct BenchOptions {
  std::string worker_list = "1,2,4,8";
  double d_min = 0.1;
  double d_max = 3.0;
  int points = 100;
  int iterations = 200;
  double learning_rate = 0.01;
  double serial_fraction = 0.05;
  bool paper_hpc = false;
  std::string out_dir = ".";
};

int run_bench(const BenchOptions& opt) {
  const int iterations = opt.paper_hpc ? 300 : opt.iterations;
  std::vector<int> requested = parse_int_list(opt.worker_list,
                                              "--worker-list");
  // The speedup baseline is the single-worker run; make sure it exists,
  // clamp to the thread cap, and drop duplicates that clamping creates.
  std::vector<int> workers;
  if (std::find(requested.begin(), requested.end(), 1) == requested.end()) {
    workers.push_back(1);
  }
  for (int w : requested) {
    const int eff = vqeforge::effective_workers(w);
    if (std::find(workers.begin(), workers.end(), eff) == workers.end()) {
      workers.push_back(eff);
    }
  }

  vqeforge::RunManifest manifest;
  manifest.command = "bench";
  manifest.config = json{{"worker_list_requested", requested},
                         {"worker_list", workers},
                         {"d_min", opt.d_min},
                         {"d_max", opt.d_max},
                         {"points", opt.points},
                         {"iterations", iterations},
                         {"learning_rate", opt.learning_rate},
                         {"serial_fraction", opt.serial_fraction},
                         {"paper_hpc", opt.paper_hpc},
                         {"out_dir", opt.out_dir}};
  manifest.started_at = vqeforge::iso8601_utc_now();

  bool all_ok = true;
  double t1 = 0.0;
  std::vector<vqeforge::BenchRow> rows;
  for (int w : workers) {
    vqeforge::SweepConfig config;
    config.d_min = opt.d_min;
    config.d_max = opt.d_max;
    config.n_points = opt.points;
    config.workers = w;
    config.adam.learning_rate = opt.learning_rate;
    config.adam.max_iterations = iterations;
    const vqeforge::SweepReport report = vqeforge::run_sweep(config);
    all_ok = all_ok && report.all_ok;
    if (w == 1) t1 = report.total_wall_seconds;
    vqeforge::BenchRow row;
    row.workers = w;
    row.total_seconds = report.total_wall_seconds;
    row.speedup_vs_w1 =
        vqeforge::measured_speedup(t1, report.total_wall_seconds);
    row.efficiency =
        vqeforge::parallel_efficiency(t1, report.total_wall_seconds, w);
    row.amdahl_speedup = vqeforge::amdahl_speedup(opt.serial_fraction, w);
    rows.push_back(row);
    std::printf("workers=%d total=%.3fs speedup=%.2f efficiency=%.2f\n", w,
                row.total_seconds, row.speedup_vs_w1, row.efficiency);
  }
  manifest.finished_at = vqeforge::iso8601_utc_now();

  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].speedup_vs_w1 < rows[i - 1].speedup_vs_w1) {
      std::cerr << "warning: speedup not monotone between workers="
                << rows[i - 1].workers << " and workers=" << rows[i].workers
                << "\n";
    }
  }

  write_outputs(opt.out_dir, "bench", vqeforge::bench_csv(rows),
                vqeforge::bench_json(manifest, rows));
  return all_ok ? 0 : 1;
}

struct ScalingOptions {
  std::string qubits = "4,8,12,14,16,18,20";
  unsigned layers = 2;
  int iterations = 5;
  double learning_rate = 0.05;
  double coupling = 1.0;
  double field = 1.0;
  bool z_sum = false;
  double theta_init = 0.1;
  bool force = false;
  std::string out_dir = ".";
};

int run_scaling(const ScalingOptions& opt) {
  vqeforge::ScalingConfig config;
  config.qubits.clear();
  for (int n : parse_int_list(opt.qubits, "--qubits")) {
    config.qubits.push_back(static_cast<std::uint32_t>(n));
  }
  config.layers = opt.layers;
  config.iterations = opt.iterations;
  config.learning_rate = opt.learning_rate;
  config.coupling = opt.coupling;
  config.field = opt.field;
  config.z_sum_mode = opt.z_sum;
  config.theta_init = opt.theta_init;
  config.force = opt.force;

  vqeforge::RunManifest manifest;
  manifest.command = "scaling";
  manifest.config = json{{"qubits", config.qubits},
                         {"layers", config.layers},
                         {"iterations", config.iterations},
                         {"learning_rate", config.learning_rate},
                         {"coupling", config.coupling},
                         {"field", config.field},
                         {"z_sum", config.z_sum_mode},
                         {"theta_init", config.theta_init},
                         {"force", config.force},
                         {"out_dir", opt.out_dir}};
  manifest.started_at = vqeforge::iso8601_utc_now();
  const auto records = vqeforge::run_scaling_study(config);
  manifest.finished_at = vqeforge::iso8601_utc_now();

  for (const auto& r : records) {
    std::printf("n_qubits=%u state_bytes=%llu runtime=%.3fs energy=%.6f\n",
                r.n_qubits, static_cast<unsigned long long>(r.state_bytes),
                r.runtime_seconds, r.final_energy);
  }
  write_outputs(opt.out_dir, "scaling", vqeforge::scaling_csv(records),
                vqeforge::scaling_json(manifest, records));
  return 0;
}

int run_exact(double bond_angstrom) {
  const vqeforge::QubitHamiltonian& h =
      vqeforge::build_h2_hamiltonian(bond_angstrom);
  std::printf("%.6f\n", vqeforge::exact_ground_energy(h));
  return 0;
}

int run_dump(double bond_angstrom) {
  std::fputs(
      vqeforge::to_text(vqeforge::build_h2_hamiltonian(bond_angstrom)).c_str(),
      stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "vqeforge: variational ground-state solver for minimal-basis H2 with "
      "parallel bond-length sweeps and register-scaling studies"};
  app.set_version_flag("--version", vqeforge::kVersion);
  app.require_subcommand(0, 1);

  double top_dump_bond = 0.0;
  auto* top_dump = app.add_option(
      "--dump-hamiltonian", top_dump_bond,
      "Print the qubit Hamiltonian at this bond length (angstrom) and exit");

  PesOptions pes;
  auto* pes_cmd = app.add_subcommand(
      "pes", "Sweep bond lengths and write the potential energy surface");
  pes_cmd->add_option("--dmin", pes.d_min, "Grid start (angstrom)")->capture_default_str();
  pes_cmd->add_option("--dmax", pes.d_max, "Grid end (angstrom)")->capture_default_str();
  pes_cmd->add_option("--points", pes.points, "Grid size")->capture_default_str();
  pes_cmd->add_option("--iterations", pes.iterations,
                      "Optimizer iterations per point")->capture_default_str();
  pes_cmd->add_option("--lr", pes.learning_rate, "Adam learning rate")->capture_default_str();
  double pes_tol = 0.0;
  auto* pes_tol_opt = pes_cmd->add_option(
      "--tol", pes_tol, "Stop a point early when the gradient infinity norm drops below this");
  pes_cmd->add_option("--workers", pes.workers, "Worker threads")->capture_default_str();
  pes_cmd->add_option("--out-dir", pes.out_dir, "Output directory")->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time the sweep at several worker counts");
  bench_cmd->add_option("--worker-list", bench.worker_list,
                        "Comma-separated worker counts")->capture_default_str();
  bench_cmd->add_option("--dmin", bench.d_min, "Grid start (angstrom)")->capture_default_str();
  bench_cmd->add_option("--dmax", bench.d_max, "Grid end (angstrom)")->capture_default_str();
  bench_cmd->add_option("--points", bench.points, "Grid size")->capture_default_str();
  bench_cmd->add_option("--iterations", bench.iterations,
                        "Optimizer iterations per point")->capture_default_str();
  bench_cmd->add_option("--lr", bench.learning_rate, "Adam learning rate")->capture_default_str();
  bench_cmd->add_option("--serial-fraction", bench.serial_fraction,
                        "Serial fraction for the Amdahl reference column")->capture_default_str();
  bench_cmd->add_flag("--paper-hpc", bench.paper_hpc,
                      "Heavy benchmark preset: 300 optimizer iterations");
  bench_cmd->add_option("--out-dir", bench.out_dir, "Output directory")->capture_default_str();

  ScalingOptions scaling;
  auto* scaling_cmd = app.add_subcommand(
      "scaling", "Runtime and memory versus register width");
  scaling_cmd->add_option("--qubits", scaling.qubits,
                          "Comma-separated register widths")->capture_default_str();
  scaling_cmd->add_option("--layers", scaling.layers,
                          "Hardware-efficient ansatz layers")->capture_default_str();
  scaling_cmd->add_option("--iterations", scaling.iterations,
                          "Optimizer iterations per width")->capture_default_str();
  scaling_cmd->add_option("--lr", scaling.learning_rate, "Adam learning rate")->capture_default_str();
  scaling_cmd->add_option("--coupling", scaling.coupling,
                          "Ising ZZ coupling strength")->capture_default_str();
  scaling_cmd->add_option("--field", scaling.field,
                          "Transverse field strength")->capture_default_str();
  scaling_cmd->add_flag("--z-sum", scaling.z_sum,
                        "Use the sum-of-Z Hamiltonian (ground energy -n)");
  scaling_cmd->add_option("--theta-init", scaling.theta_init,
                          "Initial value for every RY angle")->capture_default_str();
  scaling_cmd->add_flag("--force", scaling.force,
                        "Allow register widths past the refusal limit");
  scaling_cmd->add_option("--out-dir", scaling.out_dir, "Output directory")->capture_default_str();

  double exact_bond = 0.0;
  auto* exact_cmd = app.add_subcommand(
      "exact", "Print the exact ground energy at one bond length");
  exact_cmd->add_option("--bond", exact_bond, "Bond length (angstrom)")
      ->required();

  double dump_bond = 0.0;
  auto* dump_cmd = app.add_subcommand(
      "dump-hamiltonian", "Print the qubit Hamiltonian at one bond length");
  dump_cmd->add_option("--bond", dump_bond, "Bond length (angstrom)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*top_dump) return run_dump(top_dump_bond);
    if (*pes_cmd) {
      if (pes_tol_opt->count() > 0) pes.tolerance = pes_tol;
      return run_pes(pes);
    }
    if (*bench_cmd) return run_bench(bench);
    if (*scaling_cmd) return run_scaling(scaling);
    if (*exact_cmd) return run_exact(exact_bond);
    if (*dump_cmd) return run_dump(dump_bond);
    std::cerr << app.help();
    return 2;
  } catch (const vqeforge::BondLengthOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
