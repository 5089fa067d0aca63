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

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "vqeforge/report.hpp"
#include "vqeforge/sweep.hpp"

using nlohmann::json;

namespace {

vqeforge::SweepReport small_report() {
  vqeforge::SweepConfig config;
  config.d_min = 0.6;
  config.d_max = 1.0;
  config.n_points = 3;
  config.adam.max_iterations = 10;
  return vqeforge::run_sweep(config);
}

vqeforge::RunManifest stamped_manifest(const std::string& command) {
  vqeforge::RunManifest m;
  m.command = command;
  m.config = json{{"points", 3}};
  m.started_at = vqeforge::iso8601_utc_now();
  m.finished_at = vqeforge::iso8601_utc_now();
  return m;
}

}  // namespace

TEST_CASE("significant-digit formatting is a fixpoint under reparsing") {
  REQUIRE(vqeforge::format_sig(1.0) == "1");
  REQUIRE(vqeforge::format_sig(0.05) == "0.05");
  REQUIRE(vqeforge::format_sig(std::numeric_limits<double>::quiet_NaN()) ==
          "nan");

  std::mt19937 rng(20260813);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string s = vqeforge::format_sig(value(rng));
    const double reparsed = std::strtod(s.c_str(), nullptr);
    REQUIRE(vqeforge::format_sig(reparsed) == s);
  }
}

TEST_CASE("sweep CSV has the documented shape") {
  const auto report = small_report();
  const std::string csv = vqeforge::pes_csv(report);
  REQUIRE(csv.find('\r') == std::string::npos);

  const auto rows = vqeforge::parse_csv(csv);
  REQUIRE(rows.size() == 4);
  REQUIRE(rows[0] == std::vector<std::string>{"bond_angstrom",
                                              "energy_hartree", "theta_star",
                                              "iterations", "wall_seconds"});
  for (std::size_t r = 1; r < rows.size(); ++r) {
    REQUIRE(rows[r].size() == 5);
    REQUIRE(std::strtod(rows[r][0].c_str(), nullptr) ==
            report.points[r - 1].bond_angstrom);
  }
}

TEST_CASE("benchmark and scaling CSV headers") {
  std::vector<vqeforge::BenchRow> rows{{1, 2.0, 1.0, 1.0, 1.0},
                                       {4, 0.6, 2.0 / 0.6, 0.5 / 0.6, 3.478}};
  const auto bench = vqeforge::parse_csv(vqeforge::bench_csv(rows));
  REQUIRE(bench[0] == std::vector<std::string>{"workers", "total_seconds",
                                               "speedup_vs_w1", "efficiency",
                                               "amdahl_speedup"});
  REQUIRE(bench.size() == 3);
  REQUIRE(bench[1][0] == "1");
  REQUIRE(bench[2][0] == "4");

  std::vector<vqeforge::ScalingRecord> records{{4, 256, 0.25, -3.9, 100}};
  const auto scaling = vqeforge::parse_csv(vqeforge::scaling_csv(records));
  REQUIRE(scaling[0] == std::vector<std::string>{"n_qubits", "state_bytes",
                                                 "runtime_seconds",
                                                 "final_energy"});
  REQUIRE(scaling[1] ==
          std::vector<std::string>{"4", "256", "0.25", "-3.9"});
}

TEST_CASE("manifests serialize every run-metadata field") {
  const auto m = stamped_manifest("pes");
  const json j = vqeforge::to_json(m);
  for (const char* key : {"command", "config", "version", "host",
                          "started_at", "finished_at", "rng_seed"}) {
    REQUIRE(j.contains(key));
  }
  REQUIRE(j["command"] == "pes");
  REQUIRE_FALSE(j["version"].get<std::string>().empty());
  REQUIRE_FALSE(j["host"].get<std::string>().empty());
  REQUIRE_FALSE(j["started_at"].get<std::string>().empty());
  REQUIRE_FALSE(j["finished_at"].get<std::string>().empty());
}

TEST_CASE("JSON documents wrap a manifest and a data block") {
  const auto report = small_report();
  const json pes = vqeforge::pes_json(stamped_manifest("pes"), report);
  REQUIRE(pes.contains("manifest"));
  REQUIRE(pes.contains("data"));
  REQUIRE(pes["data"]["points"].size() == report.points.size());
  REQUIRE(pes["data"]["all_ok"] == report.all_ok);
  for (const auto& p : pes["data"]["points"]) {
    REQUIRE(p.contains("bond_angstrom"));
    REQUIRE(p.contains("energy_hartree"));
    REQUIRE(p.contains("theta_star"));
    REQUIRE(p.contains("iterations"));
    REQUIRE(p.contains("ok"));
  }

  const json bench = vqeforge::bench_json(
      stamped_manifest("bench"), {{1, 1.0, 1.0, 1.0, 1.0}});
  REQUIRE(bench.contains("manifest"));
  REQUIRE(bench["data"]["rows"].size() == 1);

  const json scaling = vqeforge::scaling_json(
      stamped_manifest("scaling"), {{4, 256, 0.25, -3.9, 100}});
  REQUIRE(scaling.contains("manifest"));
  REQUIRE(scaling["data"]["rows"][0]["state_bytes"] == 256);
}

TEST_CASE("text files round-trip through the writer") {
  const auto path = std::filesystem::temp_directory_path() /
                    "vqeforge_report_roundtrip.csv";
  const std::string body = "a,b\n1,2\n";
  vqeforge::write_text_file(path.string(), body);
  std::ifstream in(path, std::ios::binary);
  std::string read((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  REQUIRE(read == body);
  std::filesystem::remove(path);

  REQUIRE_THROWS_AS(
      vqeforge::write_text_file("/nonexistent-dir/x/y.csv", body),
      std::runtime_error);
}
