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
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vqeforge/sweep.hpp"
#include "vqeforge/version.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

namespace vqeforge {

/// Fixed-width significant-digit formatting used for all CSV numbers, so
/// a written file re-parses to the same text.
inline std::string format_sig(double value, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

inline std::string iso8601_utc_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
#if defined(_WIN32)
  gmtime_s(&tm, &now);
#else
  gmtime_r(&now, &tm);
#endif
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string host_name() {
#if defined(__unix__) || defined(__APPLE__)
  char buf[256] = {0};
  if (gethostname(buf, sizeof buf - 1) == 0 && buf[0] != '\0') return buf;
#endif
  return "unknown";
}

/**
 * Run-metadata block embedded in every JSON output (and accompanying every
 * CSV through its JSON sibling): the resolved configuration, code
 * version, host, timestamps, and the RNG seed (fixed; nothing in the
 * pipeline draws random numbers).
 */
struct RunManifest {
  std::string command;
  nlohmann::json config;
  std::string version = kVersion;
  std::string host = host_name();
  std::string started_at;
  std::string finished_at;
  std::uint64_t rng_seed = 0;
};

inline nlohmann::json to_json(const RunManifest& m) {
  return nlohmann::json{{"command", m.command}, {"config", m.config},
                        {"version", m.version}, {"host", m.host},
                        {"started_at", m.started_at},
                        {"finished_at", m.finished_at},
                        {"rng_seed", m.rng_seed}};
}

// ---------------------------------------------------------------------
// CSV emission. All files use a header row, LF newlines, and 12
// significant digits.
// ---------------------------------------------------------------------

inline std::string pes_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "bond_angstrom,energy_hartree,theta_star,iterations,wall_seconds\n";
  for (const auto& p : report.points) {
    const double theta =
        p.theta_star.empty() ? std::numeric_limits<double>::quiet_NaN()
                             : p.theta_star.front();
    out << format_sig(p.bond_angstrom) << ',' << format_sig(p.energy_hartree)
        << ',' << format_sig(theta) << ',' << p.iterations << ','
        << format_sig(p.wall_seconds) << '\n';
  }
  return out.str();
}

struct BenchRow {
  int workers = 1;
  double total_seconds = 0.0;
  double speedup_vs_w1 = 1.0;
  double efficiency = 1.0;
  double amdahl_speedup = 1.0;
};

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "workers,total_seconds,speedup_vs_w1,efficiency,amdahl_speedup\n";
  for (const auto& r : rows) {
    out << r.workers << ',' << format_sig(r.total_seconds) << ','
        << format_sig(r.speedup_vs_w1) << ',' << format_sig(r.efficiency)
        << ',' << format_sig(r.amdahl_speedup) << '\n';
  }
  return out.str();
}

inline std::string scaling_csv(const std::vector<ScalingRecord>& records) {
  std::ostringstream out;
  out << "n_qubits,state_bytes,runtime_seconds,final_energy\n";
  for (const auto& r : records) {
    out << r.n_qubits << ',' << r.state_bytes << ','
        << format_sig(r.runtime_seconds) << ',' << format_sig(r.final_energy)
        << '\n';
  }
  return out.str();
}

/// Minimal CSV reader for the files this library writes: comma-split
/// rows, first row is the header.
inline std::vector<std::vector<std::string>> parse_csv(
    const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

// ---------------------------------------------------------------------
// JSON emission: {"manifest": ..., "data": ...}.
// ---------------------------------------------------------------------

inline nlohmann::json pes_json(const RunManifest& manifest,
                               const SweepReport& report) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : report.points) {
    nlohmann::json jp{{"bond_angstrom", p.bond_angstrom},
                      {"energy_hartree", p.energy_hartree},
                      {"theta_star", p.theta_star},
                      {"iterations", p.iterations},
                      {"wall_seconds", p.wall_seconds},
                      {"ok", p.ok}};
    if (!p.ok) jp["error"] = p.error;
    points.push_back(std::move(jp));
  }
  nlohmann::json data{{"points", std::move(points)},
                      {"total_wall_seconds", report.total_wall_seconds},
                      {"per_worker_seconds", report.per_worker_seconds},
                      {"all_ok", report.all_ok}};
  return nlohmann::json{{"manifest", to_json(manifest)},
                        {"data", std::move(data)}};
}

inline nlohmann::json bench_json(const RunManifest& manifest,
                                 const std::vector<BenchRow>& rows) {
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& r : rows) {
    jrows.push_back(nlohmann::json{{"workers", r.workers},
                                   {"total_seconds", r.total_seconds},
                                   {"speedup_vs_w1", r.speedup_vs_w1},
                                   {"efficiency", r.efficiency},
                                   {"amdahl_speedup", r.amdahl_speedup}});
  }
  return nlohmann::json{{"manifest", to_json(manifest)},
                        {"data", nlohmann::json{{"rows", std::move(jrows)}}}};
}

inline nlohmann::json scaling_json(const RunManifest& manifest,
                                   const std::vector<ScalingRecord>& records) {
  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& r : records) {
    jrows.push_back(nlohmann::json{{"n_qubits", r.n_qubits},
                                   {"state_bytes", r.state_bytes},
                                   {"runtime_seconds", r.runtime_seconds},
                                   {"final_energy", r.final_energy},
                                   {"iterations_run", r.iterations_run}});
  }
  return nlohmann::json{{"manifest", to_json(manifest)},
                        {"data", nlohmann::json{{"rows", std::move(jrows)}}}};
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace vqeforge
