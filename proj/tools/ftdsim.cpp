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

// ftdsim: simulate, classify, witness, sweep.
//
// Exit codes: 0 success, 1 no witness applies at the requested t, 2 config
// or parse error, 3 numerical-invariant violation, 4 non-unitary input in
// unitary mode.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ftd/scenario.hpp"

namespace {

using ftd::io::json;
namespace sc = ftd::scenario;

constexpr int kExitNoWitness = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitNotUnitary = 4;

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::optional<double> dt;
  std::optional<std::size_t> samples;
  std::optional<std::string> out_dir;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Override the config seed");
    cmd->add_option("--dt", dt, "Override the integrator step");
    cmd->add_option("--samples", samples, "Override the number of sample times");
    cmd->add_option("--out-dir", out_dir, "Directory for output artifacts");
  }

  sc::Overrides overrides() const {
    sc::Overrides o;
    o.seed = seed;
    o.dt = dt;
    o.samples = samples;
    if (out_dir) o.out_dir = *out_dir;
    return o;
  }
};

ftd::BipartiteDims infer_dims(std::size_t n, const std::string& flag) {
  if (!flag.empty()) {
    const auto comma = flag.find(',');
    if (comma == std::string::npos) throw sc::ConfigError("--dims: expected a,b");
    try {
      return {std::stoul(flag.substr(0, comma)), std::stoul(flag.substr(comma + 1))};
    } catch (const std::logic_error&) {
      throw sc::ConfigError(fmt::format("--dims: cannot parse '{}'", flag));
    }
  }
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n) throw sc::ConfigError(fmt::format("matrix size {} is not a square; pass --dims a,b", n));
  return {d, d};
}

json predicates(const ftd::Channel& ch, std::size_t trials, std::uint64_t seed) {
  const auto purity = ftd::is_pure_state_preserving(ch, trials, seed);
  json p;
  p["trace_preserving"] = true;  // Channel construction enforces it
  p["unital"] = ftd::is_unital(ch);
  p["pure_state_preserving"] = purity.preserving;
  p["states_checked"] = purity.states_checked;
  p["trials"] = trials;
  p["seed"] = seed;
  return p;
}

json unitary_json(const ftd::ComplexMatrix& u, const ftd::BipartiteDims& dims) {
  const auto cls = ftd::classify_product_preserving_unitary(u, dims);
  json out;
  out["tag"] = ftd::to_string(cls.tag);
  if (cls.factors) {
    out["factors"] = {{"A", ftd::io::matrix_to_json(cls.factors->first)},
                      {"B", ftd::io::matrix_to_json(cls.factors->second)}};
  } else {
    out["factors"] = nullptr;
  }
  if (!cls.reason.empty()) out["reason"] = cls.reason;
  return out;
}

int cmd_classify(const std::string& path, bool channel_mode, const std::string& dims_flag, std::size_t trials,
                 std::uint64_t seed) {
  const std::string text = ftd::io::read_file(path);
  json out;
  if (channel_mode) {
    json parsed;
    try {
      parsed = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ftd::io::FormatError(fmt::format("{}: {}", path, e.what()));
    }
    const ftd::Channel ch = ftd::io::channel_from_json(parsed);
    out["mode"] = "channel";
    out["dims"] = ftd::io::dims_to_json(*ch.dims());
    out["kraus_rank"] = ftd::effective_kraus_rank(ch);
    out["predicates"] = predicates(ch, trials, seed);
    try {
      const auto u = ftd::reconstruct_unitary_from_channel(ch);
      out["reconstruction"] = "ok";
      out["unitary"] = unitary_json(u, *ch.dims());
    } catch (const ftd::ReconstructionError& e) {
      out["reconstruction"] = ftd::to_string(e.kind());
      out["unitary"] = nullptr;
    }
  } else {
    const auto u = ftd::parse_matrix_text(text);
    if (u.rows() != u.cols()) throw ftd::io::FormatError("unitary mode needs a square matrix");
    const auto dims = infer_dims(static_cast<std::size_t>(u.rows()), dims_flag);
    dims.require_square(u, "classify");
    if (!ftd::is_unitary(u)) {
      const double defect = ftd::max_abs(u.adjoint() * u - ftd::identity(static_cast<std::size_t>(u.rows())));
      throw ftd::NotUnitaryError(fmt::format("input is not unitary (max |U^dagger U - I| = {:.3e})", defect));
    }
    out["mode"] = "unitary";
    out["dims"] = ftd::io::dims_to_json(dims);
    out.update(unitary_json(u, dims));
    out["predicates"] = predicates(ftd::Channel::unitary(u, dims), trials, seed);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_simulate(const std::string& config, const CommonFlags& flags) {
  const auto loaded = sc::load_config(config);
  const auto scenario = sc::build_scenario(loaded.config, loaded.base_dir, flags.overrides());
  const auto rows = sc::run_simulation(scenario);
  std::cout << sc::summary_table(rows);
  std::cout << fmt::format("artifacts written to {}\n", scenario.out_dir.string());
  return 0;
}

int cmd_witness(const std::string& config, std::optional<double> t, const CommonFlags& flags) {
  const auto loaded = sc::load_config(config);
  const auto scenario = sc::build_scenario(loaded.config, loaded.base_dir, flags.overrides());
  const auto at = t ? t : scenario.t_bar;
  const auto result = sc::run_witness(scenario, at);
  std::cout << result.message << "\n";
  if (!result.report) return at ? kExitNoWitness : 0;
  for (const auto& iv : result.report->intervals) {
    std::cout << fmt::format("interval ({:.10f}, {:.10f}){}\n", iv.a, iv.b, iv.open_ended ? " open-ended" : "");
  }
  std::cout << fmt::format("report written to {}\n", (scenario.out_dir / result.report_json).string());
  return 0;
}

int cmd_sweep(const std::string& config, const std::string& param, const std::string& range, const CommonFlags& flags) {
  const auto loaded = sc::load_config(config);
  std::cout << sc::run_sweep(loaded.config, loaded.base_dir, flags.overrides(), param, sc::parse_range(range));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-time disentanglement simulator"};
  app.require_subcommand(1);

  CommonFlags sim_flags, wit_flags, sweep_flags;
  std::string sim_config, wit_config, sweep_config, classify_file, dims_flag, param, range;
  bool channel_mode = false;
  std::optional<double> t_bar;
  std::size_t trials = ftd::kDefaultPurityTrials;
  std::uint64_t classify_seed = 0;

  auto* simulate = app.add_subcommand("simulate", "Run a scenario config or built-in scenario");
  simulate->add_option("config", sim_config, "Config file or built-in name")->required();
  sim_flags.attach(simulate);

  auto* classify = app.add_subcommand("classify", "Classify a unitary (matrix text) or a channel (JSON)");
  classify->add_option("file", classify_file, "Input file")->required();
  classify->add_flag("--channel", channel_mode, "Input is a channel JSON file");
  classify->add_option("--dims", dims_flag, "Bipartite dims a,b for a unitary");
  classify->add_option("--trials", trials, "Random trials for the pure-state check");
  classify->add_option("--seed", classify_seed, "Seed for the pure-state check");

  auto* witness = app.add_subcommand("witness", "Construct an FTD witness");
  witness->add_option("config", wit_config, "Config file or built-in name")->required();
  witness->add_option("--t", t_bar, "Time t_bar at which to build the witness");
  wit_flags.attach(witness);

  auto* sweep = app.add_subcommand("sweep", "Sweep one numeric parameter");
  sweep->add_option("config", sweep_config, "Config file or built-in name")->required();
  sweep->add_option("--param", param, "Parameter name, e.g. rate or dynamics.q")->required();
  sweep->add_option("--range", range, "a:b:n")->required();
  sweep_flags.attach(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*simulate) return cmd_simulate(sim_config, sim_flags);
    if (*classify) return cmd_classify(classify_file, channel_mode, dims_flag, trials, classify_seed);
    if (*witness) return cmd_witness(wit_config, t_bar, wit_flags);
    if (*sweep) return cmd_sweep(sweep_config, param, range, sweep_flags);
  } catch (const ftd::NumericalInvariantError& e) {
    std::cerr << "numerical invariant violated: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ftd::NotUnitaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotUnitary;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const sc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ftd::io::FormatError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
