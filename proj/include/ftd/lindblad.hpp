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

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftd/states.hpp"

namespace ftd {

inline constexpr double kDefaultDt = 1e-3;
inline constexpr double kDriftTolerance = 1e-8;

/// Time-independent Markovian generator
///   drho/dt = -i[H, rho] + sum_i (A_i rho A_i^dagger - {A_i^dagger A_i, rho}/2).
class LindbladGenerator {
 public:
  LindbladGenerator(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> jumps, BipartiteDims dims);

  const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
  const std::vector<ComplexMatrix>& jumps() const { return jumps_; }
  const BipartiteDims& dims() const { return dims_; }

  /// Right-hand side on an arbitrary operator (the map is linear).
  ComplexMatrix rhs(const ComplexMatrix& m) const;

 private:
  ComplexMatrix hamiltonian_;
  std::vector<ComplexMatrix> jumps_;
  BipartiteDims dims_;
  ComplexMatrix effective_;  // -iH - sum_i A_i^dagger A_i / 2
};

ComplexMatrix lindblad_rhs(const LindbladGenerator& gen, const DensityOperator& rho);

/// sum_i (A_i A_i^dagger - A_i^dagger A_i) = 0 within 1e-9.
bool is_unital_generator(const LindbladGenerator& gen);

/// d/dt Tr rho^2 at t = 0 from a pure start:
///   2 sum_i (|<psi|A_i|psi>|^2 - ||A_i psi||^2)  <= 0.
double purity_derivative_at_pure(const LindbladGenerator& gen, const PureState& psi);
double purity_derivative_at_pure(std::span<const ComplexMatrix> jumps, const ComplexVector& psi);

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityOperator> states;
};

/// Raised when an integrated state drifts outside the density-operator set.
class NumericalInvariantError : public std::runtime_error {
 public:
  NumericalInvariantError(std::size_t step, double time, const std::string& what)
      : std::runtime_error(what), step_(step), time_(time) {}
  std::size_t step() const { return step_; }
  double time() const { return time_; }

 private:
  std::size_t step_;
  double time_;
};

/// One classical RK4 step of size h on an arbitrary operator.
ComplexMatrix rk4_step(const LindbladGenerator& gen, const ComplexMatrix& m, double h);

/// Fixed-step RK4 over `duration` without validation. The step is
/// duration / ceil(duration / dt) so the endpoint is hit exactly.
ComplexMatrix propagate(const LindbladGenerator& gen, const ComplexMatrix& m, double duration, double dt = kDefaultDt);

/// Fixed-step RK4 trajectory, one sample per step. States are Hermitized
/// but never renormalized; trace drift or negativity beyond 1e-8 raises
/// NumericalInvariantError naming the step.
Trajectory integrate(const LindbladGenerator& gen, const DensityOperator& rho0, double t_end, double dt = kDefaultDt);

/// Final state of integrate() without storing the trajectory.
DensityOperator evolve(const LindbladGenerator& gen, const DensityOperator& rho0, double duration,
                       double dt = kDefaultDt);

/// Two-qubit depolarizing semigroup: jumps sqrt(rate/16) P for the 15
/// non-identity Paulis, so rho(t) = e^{-rate t} rho0 + (1 - e^{-rate t}) I/4.
LindbladGenerator depolarizing_generator(double rate = 1.0);
/// Jump sqrt(rate) sigma_z (x) I.
LindbladGenerator one_sided_dephasing_generator(double rate = 1.0);
/// Jumps sqrt(rate) sigma_- (x) I and sqrt(rate) I (x) sigma_-, with
/// sigma_- = |0><1|.
LindbladGenerator amplitude_damping_generator(double rate = 1.0);

}  // namespace ftd
