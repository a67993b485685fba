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

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ftd/channels.hpp"
#include "ftd/lindblad.hpp"

namespace ftd {

struct LindbladSemigroup {
  LindbladGenerator generator;
  double dt = kDefaultDt;
};

struct UnitaryFamily {
  std::function<ComplexMatrix(double)> unitary;
};

struct ChannelFamily {
  std::function<Channel(double)> channel;
};

/// A time-parametrized family of CPTP maps on [0, horizon].
class Dynamics {
 public:
  using Kind = std::variant<LindbladSemigroup, UnitaryFamily, ChannelFamily>;

  Dynamics(Kind kind, BipartiteDims dims, double horizon);

  const Kind& kind() const { return kind_; }
  const BipartiteDims& dims() const { return dims_; }
  double horizon() const { return horizon_; }
  bool is_semigroup() const { return std::holds_alternative<LindbladSemigroup>(kind_); }

 private:
  Kind kind_;
  BipartiteDims dims_;
  double horizon_;
};

/// Lambda_t as a Kraus channel. For a semigroup the d^2 matrix units are
/// propagated and the Choi matrix is diagonalized into Kraus form.
Channel channel_at(const Dynamics& dyn, double t);

/// channel_at on an ascending list of times; semigroups propagate the matrix
/// units from one time to the next instead of restarting at 0.
std::vector<Channel> channels_at(const Dynamics& dyn, std::span<const double> times);

/// Lambda_t(rho0).
DensityOperator state_at(const Dynamics& dyn, const DensityOperator& rho0, double t);

/// Lambda_t(rho0) for ascending times. Semigroups integrate sequentially;
/// the other kinds evaluate the time points in parallel.
std::vector<DensityOperator> states_at(const Dynamics& dyn, const DensityOperator& rho0, std::span<const double> times);

/// Moves a state known at `from` to `to` > from. Semigroups integrate only the
/// gap; other kinds re-evaluate Lambda_to on rho0.
DensityOperator advance_state(const Dynamics& dyn, const DensityOperator& rho0, const DensityOperator& at_from,
                              double from, double to);

struct ContinuityReport {
  double identity_defect = 0.0;   ///< max |Lambda_0(rho) - rho| over probes
  double max_increment = 0.0;     ///< max |Lambda_{t+h}(rho) - Lambda_t(rho)|
  double step = 0.0;              ///< h = horizon / probes
  bool ok = false;                ///< identity_defect <= 1e-9 and max_increment <= modulus * h
};

/// Sampled validation: Lambda_0 = id and a Lipschitz-style bound with the
/// declared modulus at h = horizon / probes. A heuristic, not a proof of
/// continuity.
ContinuityReport check_dynamics(const Dynamics& dyn, double modulus, std::size_t probes = 10000);

/// Uniform grid of `samples` points on [0, horizon].
std::vector<double> uniform_grid(double horizon, std::size_t samples);

// Model library.

Dynamics lindblad_dynamics(LindbladGenerator gen, double horizon, double dt = kDefaultDt);
Dynamics depolarizing_dynamics(double rate, double horizon, double dt = kDefaultDt);
Dynamics one_sided_dephasing_dynamics(double rate, double horizon, double dt = kDefaultDt);
Dynamics amplitude_damping_dynamics(double rate, double horizon, double dt = kDefaultDt);
/// t -> exp(-i h t).
Dynamics hamiltonian_dynamics(const ComplexMatrix& h, BipartiteDims dims, double horizon);
/// t -> exp(-i sigma_z t) (x) exp(-i sigma_x t).
Dynamics local_rotations_dynamics(double horizon);
/// t -> exp(-i pi t (I - CNOT)/2); equals CNOT at t = 1.
Dynamics cnot_pulse_dynamics(double horizon);
/// t -> exp(-i S t) on (d, d).
Dynamics partial_swap_dynamics(std::size_t d, double horizon);
/// Lambda_t = (1 - s) id + s target with s = min(t / t_target, 1).
Dynamics channel_ramp_dynamics(const Channel& target, double t_target, double horizon);
Dynamics identity_dynamics(BipartiteDims dims, double horizon);

}  // namespace ftd
