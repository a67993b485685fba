// Copyright 2026 The ftdsim Authors
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

// Scenario configs: JSON with a "version" field. Unknown keys are errors.
//
//   {
//     "version": 1,
//     "name": "depolarizing-bell",
//     "dynamics": {"model": "depolarizing", "rate": 1.0},
//     "initial_states": [{"type": "bell", "which": "phi+"}],
//     "horizon": 3.0, "samples": 512, "dt": 0.001, "seed": 0,
//     "t_bar": 1.0,                      (optional, witness subcommand)
//     "outputs": {"dir": "out", "dump_states": false}
//   }

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ftd/io.hpp"

namespace ftd::scenario {

using io::json;

inline constexpr int kConfigVersion = 1;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InitialState {
  std::string label;
  DensityOperator state;
};

struct Scenario {
  std::string name;
  Dynamics dynamics;
  std::vector<InitialState> initial_states;
  std::size_t samples = kDefaultSamples;
  double dt = kDefaultDt;
  std::uint64_t seed = 0;
  std::optional<double> t_bar;
  std::filesystem::path out_dir;
  bool dump_states = false;
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> dt;
  std::optional<std::size_t> samples;
  std::optional<std::filesystem::path> out_dir;
};

std::vector<std::string> builtin_names();
std::optional<json> builtin_config(const std::string& name);

struct LoadedConfig {
  json config;
  std::filesystem::path base_dir;  ///< relative file references resolve here
};

/// A built-in scenario name or the path of a JSON config file.
LoadedConfig load_config(const std::string& name_or_path);

/// Validates the config and builds the dynamics and initial states.
Scenario build_scenario(const json& config, const std::filesystem::path& base_dir, const Overrides& overrides = {});

struct SummaryRow {
  std::size_t index = 0;
  std::string label;
  std::optional<double> onset;  ///< a of the first interval
  std::string verdict;          ///< FtdFound, NoFtdFound or NotEntangled
  std::string trajectory_csv;
  std::string report_json;      ///< empty when no report was written
};

/// Runs every initial state (in parallel) and, when `write` is set, writes
/// the trajectory CSVs, FtdReport JSONs and summary.csv from one thread in
/// index order.
std::vector<SummaryRow> run_simulation(const Scenario& sc, bool write = true);

std::string summary_table(const std::vector<SummaryRow>& rows);

struct WitnessResult {
  std::optional<FtdReport> report;
  std::string message;       ///< reason when no witness applies, verdict otherwise
  std::string report_json;   ///< path written, empty if none
};

/// With t_bar: the closed witness, then the unital witness at t_bar.
/// Without: classify_dynamics over the sample grid.
WitnessResult run_witness(const Scenario& sc, std::optional<double> t_bar);

struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;

  std::vector<double> values() const;
};

/// "a:b:n"
SweepRange parse_range(const std::string& text);

/// Sets a numeric parameter: "dynamics.rate" style paths, a top-level key
/// (horizon, dt, t_bar, samples) or a key of the dynamics object.
json with_parameter(json config, const std::string& name, double value);

/// One simulation per parameter value; writes sweep.csv to the out dir.
std::string run_sweep(const json& config, const std::filesystem::path& base_dir, const Overrides& overrides,
                      const std::string& param, const SweepRange& range);

}  // namespace ftd::scenario
