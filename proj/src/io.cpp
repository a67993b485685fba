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

#include "ftd/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace ftd::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out << contents;
}

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

ComplexMatrix matrix_from_json(const json& j) {
  if (j.is_string()) return parse_matrix_text(j.get<std::string>());
  if (!j.is_array() || j.empty()) throw FormatError("matrix: expected text string or non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw FormatError("matrix: row 0 is not a non-empty array");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw FormatError(fmt::format("matrix: row {} must have {} entries", r, cols));
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (e.is_number()) {
        m(r, c) = cplx(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
      } else {
        throw FormatError(fmt::format("matrix: entry ({}, {}) must be [re, im]", r, c));
      }
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

BipartiteDims dims_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw FormatError(fmt::format("'{}' must be [d_A, d_B] with integer entries", field));
  }
  const auto a = j[0].get<long long>();
  const auto b = j[1].get<long long>();
  if (a < 2 || b < 2 || a > 6 || b > 6) {
    throw FormatError(fmt::format("'{}' entries must lie in 2..6, got [{}, {}]", field, a, b));
  }
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

json dims_to_json(const BipartiteDims& dims) { return json::array({dims.a(), dims.b()}); }

DensityOperator parse_state_text(const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') break;
  }
  std::istringstream header(line);
  header.imbue(std::locale::classic());
  std::string tag;
  long long a = 0, b = 0;
  if (!(header >> tag >> a >> b) || tag != "dims") throw FormatError("state text: expected 'dims d_A d_B' first line");
  const BipartiteDims dims = dims_from_json(json::array({a, b}), "dims");
  std::ostringstream rest;
  rest << in.rdbuf();
  return {parse_matrix_text(rest.str()), dims};
}

std::string format_state_text(const DensityOperator& rho) {
  return fmt::format("dims {} {}\n", rho.dims().a(), rho.dims().b()) + format_matrix_text(rho.matrix());
}

namespace {

void require_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw FormatError(fmt::format("{}: expected a JSON object", what));
  for (const auto& [key, _] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; }) == allowed.end()) {
      throw FormatError(fmt::format("{}: unknown field '{}'", what, key));
    }
  }
  for (const char* k : allowed)
    if (!j.contains(k)) throw FormatError(fmt::format("{}: missing field '{}'", what, k));
}

}  // namespace

Channel channel_from_json(const json& j) {
  require_keys(j, {"dims", "kraus"}, "channel");
  const BipartiteDims dims = dims_from_json(j.at("dims"));
  if (!j.at("kraus").is_array() || j.at("kraus").empty()) throw FormatError("channel: 'kraus' must be a non-empty array");
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  return Channel(std::move(kraus), dims);
}

json channel_to_json(const Channel& ch) {
  json kraus = json::array();
  for (const auto& k : ch.kraus()) kraus.push_back(matrix_to_json(k));
  json out;
  out["dims"] = ch.dims() ? dims_to_json(*ch.dims()) : json(nullptr);
  out["kraus"] = std::move(kraus);
  return out;
}

LindbladGenerator generator_from_json(const json& j) {
  require_keys(j, {"dims", "hamiltonian", "jumps"}, "generator");
  const BipartiteDims dims = dims_from_json(j.at("dims"));
  if (!j.at("jumps").is_array()) throw FormatError("generator: 'jumps' must be an array");
  std::vector<ComplexMatrix> jumps;
  for (const auto& a : j.at("jumps")) jumps.push_back(matrix_from_json(a));
  return {matrix_from_json(j.at("hamiltonian")), std::move(jumps), dims};
}

json generator_to_json(const LindbladGenerator& gen) {
  json jumps = json::array();
  for (const auto& a : gen.jumps()) jumps.push_back(matrix_to_json(a));
  json out;
  out["dims"] = dims_to_json(gen.dims());
  out["hamiltonian"] = matrix_to_json(gen.hamiltonian());
  out["jumps"] = std::move(jumps);
  return out;
}

json verdict_to_json(const EntanglementVerdict& v) {
  json out;
  out["lambda_minus"] = v.lambda_minus;
  out["negativity"] = v.negativity;
  out["classification"] = to_string(v.classification);
  return out;
}

json report_to_json(const FtdReport& report, const std::string& trajectory_csv_path) {
  json intervals = json::array();
  for (const auto& iv : report.intervals) intervals.push_back({iv.a, iv.b, iv.open_ended});
  json out;
  out["method"] = to_string(report.method);
  out["dims"] = dims_to_json(report.witness_state.dims());
  out["witness"] = matrix_to_json(report.witness_state.matrix());
  out["intervals"] = std::move(intervals);
  out["trajectory_csv_path"] = trajectory_csv_path;
  if (report.details) {
    const auto& d = *report.details;
    out["details"] = {{"t_bar", d.t_bar},
                      {"mixing", d.mixing},
                      {"initial_lambda", d.initial_lambda},
                      {"image_lambda", d.image_lambda},
                      {"delta", d.delta},
                      {"window", {d.window_lo, d.window_hi}}};
  }
  return out;
}

FtdReport report_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("report: expected a JSON object");
  const std::string method = j.at("method").get<std::string>();
  FtdMethod m;
  if (method == "scan") m = FtdMethod::Scan;
  else if (method == "closed_witness") m = FtdMethod::ClosedWitness;
  else if (method == "unital_witness") m = FtdMethod::UnitalWitness;
  else throw FormatError(fmt::format("report: unknown method '{}'", method));
  DensityOperator witness(matrix_from_json(j.at("witness")), dims_from_json(j.at("dims")));
  FtdReport report{m, std::move(witness), {}, {}, std::nullopt};
  for (const auto& iv : j.at("intervals")) {
    if (!iv.is_array() || iv.size() != 3) throw FormatError("report: interval must be [a, b, open_ended]");
    report.intervals.push_back({iv[0].get<double>(), iv[1].get<double>(), iv[2].get<bool>()});
  }
  return report;
}

std::string trajectory_csv(const EntanglementTrajectory& traj) {
  std::string out = kTrajectoryHeader;
  out += '\n';
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const auto& s = traj.samples[i];
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", traj.times[i], s.trace, s.purity, s.lambda_minus,
                       s.negativity);
  }
  return out;
}

json trajectory_states_json(const EntanglementTrajectory& traj) {
  json out = json::array();
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    out.push_back({{"t", traj.times[i]}, {"rho", matrix_to_json(traj.states[i].matrix())}});
  }
  return out;
}

}  // namespace ftd::io
