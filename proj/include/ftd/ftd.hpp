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

// Finite-time disentanglement: a state entangled at t = 0 whose image is
// not entangled on some interval (a, b) with 0 < a.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ftd/dynamics.hpp"
#include "ftd/entanglement.hpp"
#include "ftd/kernels.hpp"

namespace ftd {

inline constexpr std::size_t kDefaultSamples = 512;
inline constexpr double kCrossingResolution = 1e-7;

struct EntanglementTrajectory {
  std::vector<double> times;
  std::vector<DensityOperator> states;
  std::vector<kernels::StateSample> samples;
};

/// Lambda_t(rho0) and its diagnostics on `times` (ascending).
EntanglementTrajectory entanglement_trajectory(const Dynamics& dyn, const DensityOperator& rho0,
                                               std::span<const double> times);
/// Same on a uniform grid of `samples` points.
EntanglementTrajectory entanglement_trajectory(const Dynamics& dyn, const DensityOperator& rho0,
                                               std::size_t samples = kDefaultSamples);

struct FtdInterval {
  double a = 0.0;
  double b = 0.0;
  bool open_ended = false;  ///< b is the horizon and the state was still not entangled there
};

enum class FtdMethod { Scan, ClosedWitness, UnitalWitness };

std::string to_string(FtdMethod m);

/// Parameters of a constructed witness.
struct WitnessDetails {
  double t_bar = 0.0;
  double mixing = 0.0;           ///< weight on the pure entangled state
  double initial_lambda = 0.0;   ///< predicted lambda_minus at t = 0
  double image_lambda = 0.0;     ///< predicted lambda_minus at t_bar
  double delta = 0.0;            ///< unital route: lambda_minus of the image of the pure state
  double window_lo = 0.0;        ///< unital route: admissible mixing window
  double window_hi = 0.0;
};

struct FtdReport {
  FtdMethod method = FtdMethod::Scan;
  DensityOperator witness_state;
  std::vector<FtdInterval> intervals;
  EntanglementTrajectory trajectory;
  std::optional<WitnessDetails> details;
};

class NotEntangledError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scans lambda_minus on a uniform grid (plus `extra_times`), refines every
/// entangled/non-entangled transition by bisection and returns the maximal
/// non-entangled intervals. nullopt when there is none. Throws
/// NotEntangledError if rho0 is not entangled.
std::optional<FtdReport> detect_ftd(const Dynamics& dyn, const DensityOperator& rho0,
                                    std::size_t samples = kDefaultSamples, std::vector<double> extra_times = {});

struct NotApplicable {
  std::string reason;
};

using WitnessOutcome = std::variant<FtdReport, NotApplicable>;

/// Witness for a unitary Lambda_{t_bar} that is neither local nor a local
/// swap: half the isotropic threshold of an entangled preimage of a product.
WitnessOutcome closed_system_witness(const Dynamics& dyn, double t_bar, std::size_t samples = kDefaultSamples);

/// Witness for a unital, non-unitary two-qubit Lambda_{t_bar}, mixing a
/// maximally entangled state whose image is mixed with I/4.
WitnessOutcome unital_qubit_witness(const Dynamics& dyn, double t_bar, std::size_t samples = kDefaultSamples,
                                    std::uint64_t seed = 0);

/// Re-evaluates the report's witness at 10 fresh points inside each interval
/// and confirms it is entangled at t = 0.
bool verify_report(const Dynamics& dyn, const FtdReport& report, std::size_t fresh_points = 10);

enum class DynamicsVerdict { AllLocalUnitary, ExhibitsFtd, Undetermined };

std::string to_string(DynamicsVerdict v);

struct SampleClass {
  double t = 0.0;
  std::optional<UnitaryTag> tag;  ///< nullopt when Lambda_t is not unitary
  bool unital = false;
};

struct DynamicsClass {
  DynamicsVerdict verdict = DynamicsVerdict::Undetermined;
  std::vector<SampleClass> samples;
  std::vector<double> local_swap_instants;
  std::optional<FtdReport> report;  ///< verified, present iff ExhibitsFtd
};

/// Per-sample unitary classification, then the closed witness, the unital
/// witness and finally a scan over standard entangled inputs.
DynamicsClass classify_dynamics(const Dynamics& dyn, std::size_t samples = kDefaultSamples);

}  // namespace ftd
