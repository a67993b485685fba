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

#include "ftd/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <numbers>

#include <fmt/format.h>

namespace ftd::scenario {

namespace fs = std::filesystem;

namespace {

// Rejects keys outside `allowed`; `where` prefixes error messages.
void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(fmt::format("{}: expected an object", where));
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; })) {
      throw ConfigError(fmt::format("{}: unknown field '{}'", where, key));
    }
  }
}

double get_real(const json& j, const char* key, double fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(fmt::format("{}.{}: expected a number", where, key));
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(fmt::format("{}.{}: must be finite", where, key));
  return x;
}

double get_positive(const json& j, const char* key, double fallback, const std::string& where) {
  const double x = get_real(j, key, fallback, where);
  if (!(x > 0.0)) throw ConfigError(fmt::format("{}.{}: must be positive", where, key));
  return x;
}

std::size_t get_count(const json& j, const char* key, std::size_t fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(fmt::format("{}.{}: expected a non-negative integer", where, key));
  }
  return v.get<std::size_t>();
}

BipartiteDims get_dims(const json& j, const std::string& where) {
  if (!j.contains("dims")) throw ConfigError(fmt::format("{}: missing field 'dims'", where));
  try {
    return io::dims_from_json(j.at("dims"), where + ".dims");
  } catch (const io::FormatError& e) {
    throw ConfigError(e.what());
  }
}

// Inline object or path string.
json inline_or_file(const json& j, const fs::path& base_dir, const std::string& where) {
  if (j.is_string()) {
    const fs::path p = base_dir / j.get<std::string>();
    if (!fs::exists(p)) throw ConfigError(fmt::format("{}: file '{}' does not exist", where, p.string()));
    try {
      return json::parse(io::read_file(p));
    } catch (const json::parse_error& e) {
      throw ConfigError(fmt::format("{}: {}", where, e.what()));
    }
  }
  if (j.is_object()) return j;
  throw ConfigError(fmt::format("{}: expected an object or a file path", where));
}

Dynamics build_dynamics(const json& d, double horizon, double dt, const fs::path& base_dir) {
  const std::string where = "dynamics";
  if (!d.is_object() || !d.contains("model") || !d.at("model").is_string()) {
    throw ConfigError("dynamics.model: missing or not a string");
  }
  const std::string model = d.at("model").get<std::string>();
  if (model == "depolarizing" || model == "dephasing" || model == "amplitude-damping") {
    check_keys(d, {"model", "rate"}, where);
    const double rate = get_positive(d, "rate", 1.0, where);
    if (model == "depolarizing") return depolarizing_dynamics(rate, horizon, dt);
    if (model == "dephasing") return one_sided_dephasing_dynamics(rate, horizon, dt);
    return amplitude_damping_dynamics(rate, horizon, dt);
  }
  if (model == "dephasing-channel") {
    check_keys(d, {"model", "q", "t_target"}, where);
    const double q = get_real(d, "q", 0.5, where);
    if (q < 0.0 || q > 1.0) throw ConfigError("dynamics.q: must lie in [0, 1]");
    return channel_ramp_dynamics(one_sided_dephasing_channel(q), get_positive(d, "t_target", 1.0, where), horizon);
  }
  if (model == "channel-ramp") {
    check_keys(d, {"model", "channel", "t_target"}, where);
    if (!d.contains("channel")) throw ConfigError("dynamics: missing field 'channel'");
    const Channel target = io::channel_from_json(inline_or_file(d.at("channel"), base_dir, "dynamics.channel"));
    return channel_ramp_dynamics(target, get_positive(d, "t_target", 1.0, where), horizon);
  }
  if (model == "local-rotations" || model == "cnot-pulse") {
    check_keys(d, {"model"}, where);
    return model == "cnot-pulse" ? cnot_pulse_dynamics(horizon) : local_rotations_dynamics(horizon);
  }
  if (model == "partial-swap") {
    check_keys(d, {"model", "d"}, where);
    const std::size_t n = get_count(d, "d", 2, where);
    if (n < 2 || n > 6) throw ConfigError("dynamics.d: must lie in 2..6");
    return partial_swap_dynamics(n, horizon);
  }
  if (model == "identity") {
    check_keys(d, {"model", "dims"}, where);
    return identity_dynamics(get_dims(d, where), horizon);
  }
  if (model == "lindblad") {
    check_keys(d, {"model", "generator"}, where);
    if (!d.contains("generator")) throw ConfigError("dynamics: missing field 'generator'");
    return lindblad_dynamics(io::generator_from_json(inline_or_file(d.at("generator"), base_dir, "dynamics.generator")),
                             horizon, dt);
  }
  if (model == "hamiltonian") {
    check_keys(d, {"model", "dims", "hamiltonian"}, where);
    if (!d.contains("hamiltonian")) throw ConfigError("dynamics: missing field 'hamiltonian'");
    const ComplexMatrix h = io::matrix_from_json(d.at("hamiltonian"));
    if (!is_hermitian(h)) throw ConfigError("dynamics.hamiltonian: not Hermitian");
    return hamiltonian_dynamics(h, get_dims(d, where), horizon);
  }
  throw ConfigError(fmt::format("dynamics.model: unknown model '{}'", model));
}

BellState parse_bell(const json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + ": expected one of phi+, phi-, psi+, psi-");
  const auto s = j.get<std::string>();
  if (s == "phi+") return BellState::PhiPlus;
  if (s == "phi-") return BellState::PhiMinus;
  if (s == "psi+") return BellState::PsiPlus;
  if (s == "psi-") return BellState::PsiMinus;
  throw ConfigError(fmt::format("{}: unknown Bell state '{}'", where, s));
}

ComplexVector parse_amplitudes(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ConfigError(where + ": expected a non-empty array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    if (e.is_number()) {
      v(static_cast<Eigen::Index>(i)) = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      v(static_cast<Eigen::Index>(i)) = cplx(e[0].get<double>(), e[1].get<double>());
    } else {
      throw ConfigError(fmt::format("{}[{}]: expected a number or [re, im]", where, i));
    }
  }
  return v;
}

InitialState build_state(const json& s, const fs::path& base_dir, const std::string& where) {
  if (!s.is_object() || !s.contains("type") || !s.at("type").is_string()) {
    throw ConfigError(where + ".type: missing or not a string");
  }
  const std::string type = s.at("type").get<std::string>();
  std::string label = s.contains("label") && s.at("label").is_string() ? s.at("label").get<std::string>() : "";
  auto named = [&](std::string fallback) { return label.empty() ? fallback : label; };

  if (type == "bell") {
    check_keys(s, {"type", "label", "which"}, where);
    if (!s.contains("which")) throw ConfigError(where + ": missing field 'which'");
    const auto b = parse_bell(s.at("which"), where + ".which");
    return {named("bell " + s.at("which").get<std::string>()), DensityOperator::from_pure(bell_state(b))};
  }
  if (type == "werner") {
    check_keys(s, {"type", "label", "p"}, where);
    const double p = get_real(s, "p", 1.0, where);
    if (p < 0.0 || p > 1.0) throw ConfigError(where + ".p: must lie in [0, 1]");
    const auto phi = DensityOperator::from_pure(bell_state(BellState::PhiPlus));
    return {named(fmt::format("werner p={}", p)), isotropic_mix(phi, 1.0 - p)};
  }
  if (type == "maximally-entangled") {
    check_keys(s, {"type", "label", "dims"}, where);
    const auto dims = get_dims(s, where);
    return {named(fmt::format("maximally-entangled {}x{}", dims.a(), dims.b())),
            DensityOperator::from_pure(maximally_entangled(dims))};
  }
  if (type == "amplitudes") {
    check_keys(s, {"type", "label", "dims", "amplitudes"}, where);
    const auto dims = get_dims(s, where);
    if (!s.contains("amplitudes")) throw ConfigError(where + ": missing field 'amplitudes'");
    const ComplexVector v = parse_amplitudes(s.at("amplitudes"), where + ".amplitudes");
    if (static_cast<std::size_t>(v.size()) != dims.total()) {
      throw ConfigError(fmt::format("{}.amplitudes: expected {} entries, got {}", where, dims.total(), v.size()));
    }
    return {named("amplitudes"), DensityOperator::from_pure(PureState::normalized(v, dims))};
  }
  if (type == "isotropic") {
    check_keys(s, {"type", "label", "of", "lambda"}, where);
    if (!s.contains("of")) throw ConfigError(where + ": missing field 'of'");
    const auto inner = build_state(s.at("of"), base_dir, where + ".of");
    const double lambda = get_real(s, "lambda", 0.0, where);
    if (lambda < 0.0 || lambda > 1.0) throw ConfigError(where + ".lambda: must lie in [0, 1]");
    return {named(fmt::format("isotropic({}) lambda={}", inner.label, lambda)), isotropic_mix(inner.state, lambda)};
  }
  if (type == "file") {
    check_keys(s, {"type", "label", "path"}, where);
    if (!s.contains("path") || !s.at("path").is_string()) throw ConfigError(where + ".path: missing or not a string");
    const fs::path p = base_dir / s.at("path").get<std::string>();
    if (!fs::exists(p)) throw ConfigError(fmt::format("{}.path: file '{}' does not exist", where, p.string()));
    return {named(p.filename().string()), io::parse_state_text(io::read_file(p))};
  }
  throw ConfigError(fmt::format("{}.type: unknown state type '{}'", where, type));
}

json bell(const char* which) { return {{"type", "bell"}, {"which", which}}; }

std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

std::string onset_text(const std::optional<double>& a) { return a ? io::format_real(*a) : ""; }

}  // namespace

std::vector<std::string> builtin_names() {
  return {"depolarizing-bell", "dephasing-witness", "amplitude-damping-sudden-death",
          "cnot-pulse",        "local-rotations",   "partial-swap"};
}

std::optional<json> builtin_config(const std::string& name) {
  json c;
  c["version"] = kConfigVersion;
  c["name"] = name;
  c["samples"] = 512;
  c["dt"] = kDefaultDt;
  c["seed"] = 0;
  if (name == "depolarizing-bell") {
    c["dynamics"] = {{"model", "depolarizing"}, {"rate", 1.0}};
    c["horizon"] = 3.0;
    c["initial_states"] = json::array({bell("phi+")});
  } else if (name == "dephasing-witness") {
    c["dynamics"] = {{"model", "dephasing-channel"}, {"q", 0.5}, {"t_target", 1.0}};
    c["horizon"] = 2.0;
    c["t_bar"] = 1.0;
    c["initial_states"] = json::array({bell("phi+"), {{"type", "werner"}, {"p", 2.0 / 3.0}}});
  } else if (name == "amplitude-damping-sudden-death") {
    c["dynamics"] = {{"model", "amplitude-damping"}, {"rate", 1.0}};
    c["horizon"] = 3.0;
    c["initial_states"] = json::array(
        {{{"type", "amplitudes"}, {"dims", {2, 2}}, {"amplitudes", {std::sqrt(0.1), 0.0, 0.0, std::sqrt(0.9)}}},
         bell("phi+")});
  } else if (name == "cnot-pulse") {
    c["dynamics"] = {{"model", "cnot-pulse"}};
    c["horizon"] = 2.0;
    c["t_bar"] = 1.0;
    c["initial_states"] = json::array({{{"type", "werner"}, {"p", 2.0 / 3.0}}, bell("phi+")});
  } else if (name == "local-rotations") {
    c["dynamics"] = {{"model", "local-rotations"}};
    c["horizon"] = 3.0;
    c["initial_states"] = json::array({bell("phi+"), bell("psi-"), {{"type", "werner"}, {"p", 2.0 / 3.0}}});
  } else if (name == "partial-swap") {
    c["dynamics"] = {{"model", "partial-swap"}, {"d", 2}};
    c["horizon"] = std::numbers::pi / 2.0;
    c["t_bar"] = std::numbers::pi / 4.0;
    // (|01> + i|10>)/sqrt2 is mapped to |01> at t = pi/4.
    const json rotating = {{"type", "amplitudes"}, {"dims", {2, 2}}, {"amplitudes", {0.0, 1.0, {0.0, 1.0}, 0.0}}};
    c["initial_states"] = json::array(
        {bell("phi+"), bell("psi-"), {{"type", "isotropic"}, {"of", rotating}, {"lambda", 1.0 / 3.0}, {"label", "isotropic(rotating)"}}});
  } else {
    return std::nullopt;
  }
  return c;
}

LoadedConfig load_config(const std::string& name_or_path) {
  if (auto c = builtin_config(name_or_path)) return {*c, fs::current_path()};
  const fs::path p(name_or_path);
  if (!fs::exists(p)) {
    throw ConfigError(fmt::format("'{}' is neither a built-in scenario nor an existing file", name_or_path));
  }
  try {
    return {json::parse(io::read_file(p)), fs::absolute(p).parent_path()};
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("{}: {}", p.string(), e.what()));
  }
}

Scenario build_scenario(const json& config, const fs::path& base_dir, const Overrides& overrides) {
  check_keys(config, {"version", "name", "dynamics", "initial_states", "horizon", "samples", "dt", "seed", "t_bar", "outputs"},
             "config");
  if (!config.contains("version")) throw ConfigError("config: missing field 'version'");
  if (!config.at("version").is_number_integer() || config.at("version").get<int>() != kConfigVersion) {
    throw ConfigError(fmt::format("version: unsupported (expected {})", kConfigVersion));
  }
  for (const char* key : {"dynamics", "initial_states", "horizon"})
    if (!config.contains(key)) throw ConfigError(fmt::format("config: missing field '{}'", key));

  const std::string name = config.contains("name") && config.at("name").is_string() ? config.at("name").get<std::string>()
                                                                                    : std::string("scenario");
  const double horizon = get_positive(config, "horizon", 1.0, "config");
  const double dt = overrides.dt.value_or(get_positive(config, "dt", kDefaultDt, "config"));
  if (!(dt > 0.0)) throw ConfigError("dt: must be positive");
  const std::size_t samples = overrides.samples.value_or(get_count(config, "samples", kDefaultSamples, "config"));
  if (samples < 2) throw ConfigError("samples: need at least 2");
  std::uint64_t seed = 0;
  if (config.contains("seed")) {
    const json& v = config.at("seed");
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0)) {
      throw ConfigError("seed: expected a non-negative integer");
    }
    seed = config.at("seed").get<std::uint64_t>();
  }
  if (overrides.seed) seed = *overrides.seed;

  std::optional<double> t_bar;
  if (config.contains("t_bar")) t_bar = get_positive(config, "t_bar", 0.0, "config");

  fs::path out_dir = "out";
  bool dump_states = false;
  if (config.contains("outputs")) {
    const json& o = config.at("outputs");
    check_keys(o, {"dir", "dump_states"}, "outputs");
    if (o.contains("dir")) {
      if (!o.at("dir").is_string()) throw ConfigError("outputs.dir: expected a string");
      out_dir = base_dir / o.at("dir").get<std::string>();
    }
    if (o.contains("dump_states")) {
      if (!o.at("dump_states").is_boolean()) throw ConfigError("outputs.dump_states: expected a boolean");
      dump_states = o.at("dump_states").get<bool>();
    }
  }
  if (overrides.out_dir) out_dir = *overrides.out_dir;

  Dynamics dyn = build_dynamics(config.at("dynamics"), horizon, dt, base_dir);
  if (t_bar && *t_bar > horizon) throw ConfigError("t_bar: exceeds horizon");

  const json& states = config.at("initial_states");
  if (!states.is_array() || states.empty()) throw ConfigError("initial_states: expected a non-empty array");
  std::vector<InitialState> initial;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string where = fmt::format("initial_states[{}]", i);
    auto s = build_state(states[i], base_dir, where);
    if (!(s.state.dims() == dyn.dims())) {
      throw ConfigError(fmt::format("{}.dims: ({}, {}) differs from the dynamics dims ({}, {})", where, s.state.dims().a(),
                                    s.state.dims().b(), dyn.dims().a(), dyn.dims().b()));
    }
    initial.push_back(std::move(s));
  }
  return {name, std::move(dyn), std::move(initial), samples, dt, seed, t_bar, out_dir, dump_states};
}

namespace {

struct StateRun {
  EntanglementTrajectory trajectory;
  std::optional<FtdReport> report;
  std::string verdict;
};

StateRun run_state(const Scenario& sc, const DensityOperator& rho0) {
  StateRun run;
  if (classify_separability(rho0).classification != Separability::Entangled) {
    run.trajectory = entanglement_trajectory(sc.dynamics, rho0, sc.samples);
    run.verdict = "NotEntangled";
    return run;
  }
  run.report = detect_ftd(sc.dynamics, rho0, sc.samples);
  if (run.report) {
    run.trajectory = run.report->trajectory;
    run.verdict = "FtdFound";
  } else {
    run.trajectory = entanglement_trajectory(sc.dynamics, rho0, sc.samples);
    run.verdict = "NoFtdFound";
  }
  return run;
}

}  // namespace

std::vector<SummaryRow> run_simulation(const Scenario& sc, bool write) {
  const std::size_t n = sc.initial_states.size();
  std::vector<std::optional<StateRun>> runs(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      runs[k] = run_state(sc, sc.initial_states[k].state);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SummaryRow> rows;
  std::string summary = "index,label,onset,verdict\n";
  for (std::size_t i = 0; i < n; ++i) {
    const StateRun& run = *runs[i];
    SummaryRow row;
    row.index = i;
    row.label = csv_safe(sc.initial_states[i].label);
    row.verdict = run.verdict;
    if (run.report) row.onset = run.report->intervals.front().a;
    const std::string stem = fmt::format("{}_state{}", sc.name, i);
    row.trajectory_csv = stem + ".csv";
    if (write) {
      io::write_file(sc.out_dir / row.trajectory_csv, io::trajectory_csv(run.trajectory));
      if (run.report) {
        row.report_json = stem + "_report.json";
        io::write_file(sc.out_dir / row.report_json, io::report_to_json(*run.report, row.trajectory_csv).dump(2) + "\n");
      }
      if (sc.dump_states) {
        io::write_file(sc.out_dir / (stem + "_states.json"), io::trajectory_states_json(run.trajectory).dump() + "\n");
      }
    }
    summary += fmt::format("{},{},{},{}\n", i, row.label, onset_text(row.onset), row.verdict);
    rows.push_back(std::move(row));
  }
  if (write) io::write_file(sc.out_dir / "summary.csv", summary);
  return rows;
}

std::string summary_table(const std::vector<SummaryRow>& rows) {
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.label.size());
  std::string out = fmt::format("{:<5}  {:<{}}  {:<20}  {}\n", "index", "label", width, "onset", "verdict");
  for (const auto& r : rows) {
    out += fmt::format("{:<5}  {:<{}}  {:<20}  {}\n", r.index, r.label, width, r.onset ? fmt::format("{:.10f}", *r.onset) : "-",
                       r.verdict);
  }
  return out;
}

WitnessResult run_witness(const Scenario& sc, std::optional<double> t_bar) {
  WitnessResult result;
  if (t_bar) {
    if (!(*t_bar > 0.0) || *t_bar > sc.dynamics.horizon()) throw ConfigError("--t: must lie in (0, horizon]");
    auto closed = closed_system_witness(sc.dynamics, *t_bar, sc.samples);
    if (auto* r = std::get_if<FtdReport>(&closed)) {
      result.report = std::move(*r);
    } else {
      auto unital = unital_qubit_witness(sc.dynamics, *t_bar, sc.samples, sc.seed);
      if (auto* u = std::get_if<FtdReport>(&unital)) {
        result.report = std::move(*u);
      } else {
        result.message = fmt::format("NotApplicable: {}; {}", std::get<NotApplicable>(closed).reason,
                                     std::get<NotApplicable>(unital).reason);
        return result;
      }
    }
    result.message = fmt::format("witness via {}", to_string(result.report->method));
  } else {
    auto cls = classify_dynamics(sc.dynamics, sc.samples);
    result.message = to_string(cls.verdict);
    if (!cls.local_swap_instants.empty()) {
      result.message += fmt::format(" (LocalSwap at {} sample(s), first t = {})", cls.local_swap_instants.size(),
                                    io::format_real(cls.local_swap_instants.front()));
    }
    result.report = std::move(cls.report);
    if (!result.report) return result;
  }
  const std::string stem = sc.name + "_witness";
  io::write_file(sc.out_dir / (stem + ".csv"), io::trajectory_csv(result.report->trajectory));
  result.report_json = stem + "_report.json";
  io::write_file(sc.out_dir / result.report_json, io::report_to_json(*result.report, stem + ".csv").dump(2) + "\n");
  return result;
}

std::vector<double> SweepRange::values() const {
  std::vector<double> v;
  if (count == 1) return {start};
  for (std::size_t i = 0; i < count; ++i) {
    v.push_back(start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return v;
}

SweepRange parse_range(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw ConfigError(fmt::format("--range: expected a:b:n, got '{}'", text));
  auto real = [&](std::string_view s) {
    double x = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(x)) {
      throw ConfigError(fmt::format("--range: bad number '{}'", s));
    }
    return x;
  };
  const std::string_view sv(text);
  SweepRange r;
  r.start = real(sv.substr(0, c1));
  r.stop = real(sv.substr(c1 + 1, c2 - c1 - 1));
  const auto ns = sv.substr(c2 + 1);
  const auto [p, ec] = std::from_chars(ns.data(), ns.data() + ns.size(), r.count);
  if (ec != std::errc() || p != ns.data() + ns.size() || r.count == 0) {
    throw ConfigError(fmt::format("--range: bad count '{}'", ns));
  }
  return r;
}

json with_parameter(json config, const std::string& name, double value) {
  if (name.empty()) throw ConfigError("--param: empty name");
  json* target = &config;
  std::string key = name;
  if (const auto dot = name.find('.'); dot != std::string::npos) {
    const std::string head = name.substr(0, dot);
    if (!config.contains(head) || !config.at(head).is_object()) {
      throw ConfigError(fmt::format("--param: '{}' is not an object in the config", head));
    }
    target = &config[head];
    key = name.substr(dot + 1);
  } else if (key != "horizon" && key != "dt" && key != "t_bar" && key != "samples") {
    if (!config.contains("dynamics") || !config.at("dynamics").is_object()) throw ConfigError("--param: no dynamics object");
    target = &config["dynamics"];
  }
  if (key == "samples" || key == "d") {
    (*target)[key] = static_cast<long long>(std::llround(value));
  } else {
    (*target)[key] = value;
  }
  return config;
}

std::string run_sweep(const json& config, const fs::path& base_dir, const Overrides& overrides, const std::string& param,
                      const SweepRange& range) {
  std::string out = fmt::format("{},index,label,onset,verdict\n", param);
  fs::path out_dir = "out";
  for (const double v : range.values()) {
    const Scenario sc = build_scenario(with_parameter(config, param, v), base_dir, overrides);
    out_dir = sc.out_dir;
    for (const auto& row : run_simulation(sc, false)) {
      out += fmt::format("{},{},{},{},{}\n", io::format_real(v), row.index, row.label, onset_text(row.onset), row.verdict);
    }
  }
  io::write_file(out_dir / "sweep.csv", out);
  return out;
}

}  // namespace ftd::scenario
