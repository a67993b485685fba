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

// File formats. Matrices in JSON are either the text form as a string or
// nested [[[re, im], ...], ...] arrays; writers always emit arrays.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ftd/ftd.hpp"

namespace ftd::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kTrajectoryHeader = "t,tr,purity,lambda_minus,negativity";

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

ComplexMatrix matrix_from_json(const json& j);
json matrix_to_json(const ComplexMatrix& m);

/// [d_A, d_B]; `field` names the offending key in error messages.
BipartiteDims dims_from_json(const json& j, const std::string& field = "dims");
json dims_to_json(const BipartiteDims& dims);

/// "dims d_A d_B" line followed by the matrix text form.
DensityOperator parse_state_text(const std::string& text);
std::string format_state_text(const DensityOperator& rho);

/// {"dims":[dA,dB], "kraus":[matrix, ...]}
Channel channel_from_json(const json& j);
json channel_to_json(const Channel& ch);

/// {"dims":[dA,dB], "hamiltonian": matrix, "jumps":[matrix, ...]}
LindbladGenerator generator_from_json(const json& j);
json generator_to_json(const LindbladGenerator& gen);

json verdict_to_json(const EntanglementVerdict& v);

/// {method, dims, witness, intervals:[[a,b,open_ended],...], trajectory_csv_path, details?}
json report_to_json(const FtdReport& report, const std::string& trajectory_csv_path);
/// Inverse of report_to_json; the trajectory is left empty.
FtdReport report_from_json(const json& j);

std::string trajectory_csv(const EntanglementTrajectory& traj);
/// Per-step density matrices: [{"t": t, "rho": matrix}, ...].
json trajectory_states_json(const EntanglementTrajectory& traj);

/// Fixed-precision text for a double, independent of the global locale.
std::string format_real(double x);

}  // namespace ftd::io
