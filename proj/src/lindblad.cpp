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

#include "ftd/lindblad.hpp"

#include <cmath>

#include <fmt/format.h>

namespace ftd {

LindbladGenerator::LindbladGenerator(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> jumps, BipartiteDims dims)
    : hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)), dims_(dims) {
  dims_.require_square(hamiltonian_, "generator hamiltonian");
  const double defect = hermiticity_defect(hamiltonian_);
  if (defect > kHermitianTolerance) {
    throw NotHermitianError(fmt::format("generator hamiltonian is not Hermitian (defect {:.3e})", defect));
  }
  const auto n = static_cast<Eigen::Index>(dims_.total());
  ComplexMatrix decay = ComplexMatrix::Zero(n, n);
  for (const auto& a : jumps_) {
    dims_.require_square(a, "generator jump operator");
    decay += a.adjoint() * a;
  }
  effective_ = cplx(0.0, -1.0) * hamiltonian_ - 0.5 * decay;
}

ComplexMatrix LindbladGenerator::rhs(const ComplexMatrix& m) const {
  ComplexMatrix out = effective_ * m + m * effective_.adjoint();
  for (const auto& a : jumps_) out.noalias() += a * m * a.adjoint();
  return out;
}

ComplexMatrix lindblad_rhs(const LindbladGenerator& gen, const DensityOperator& rho) {
  if (!(gen.dims() == rho.dims())) throw DimensionError("lindblad_rhs: dims mismatch");
  return gen.rhs(rho.matrix());
}

bool is_unital_generator(const LindbladGenerator& gen) {
  const auto n = static_cast<Eigen::Index>(gen.dims().total());
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& a : gen.jumps()) sum += a * a.adjoint() - a.adjoint() * a;
  return max_abs(sum) <= 1e-9;
}

double purity_derivative_at_pure(std::span<const ComplexMatrix> jumps, const ComplexVector& psi) {
  double sum = 0.0;
  for (const auto& a : jumps) {
    const ComplexVector image = a * psi;
    sum += std::norm(psi.dot(image)) - image.squaredNorm();
  }
  return 2.0 * sum;
}

double purity_derivative_at_pure(const LindbladGenerator& gen, const PureState& psi) {
  if (!(gen.dims() == psi.dims())) throw DimensionError("purity_derivative_at_pure: dims mismatch");
  return purity_derivative_at_pure(gen.jumps(), psi.amplitudes());
}

ComplexMatrix rk4_step(const LindbladGenerator& gen, const ComplexMatrix& m, double h) {
  const ComplexMatrix k1 = gen.rhs(m);
  const ComplexMatrix k2 = gen.rhs(m + 0.5 * h * k1);
  const ComplexMatrix k3 = gen.rhs(m + 0.5 * h * k2);
  const ComplexMatrix k4 = gen.rhs(m + h * k3);
  return m + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

namespace {

std::size_t step_count(double duration, double dt) {
  if (!(duration >= 0.0) || !(dt > 0.0)) throw std::invalid_argument("step size and duration must be positive");
  if (duration == 0.0) return 0;
  return static_cast<std::size_t>(std::ceil(duration / dt - 1e-9));
}

DensityOperator checked_state(const ComplexMatrix& m, const BipartiteDims& dims, std::size_t step, double t) {
  const double drift = std::abs(m.trace().real() - 1.0);
  if (drift > kDriftTolerance) {
    throw NumericalInvariantError(step, t, fmt::format("trace drift {:.3e} at step {} (t = {})", drift, step, t));
  }
  try {
    return {m, dims, kDriftTolerance};
  } catch (const InvalidStateError& e) {
    throw NumericalInvariantError(step, t, fmt::format("{} at step {} (t = {})", e.what(), step, t));
  }
}

}  // namespace

ComplexMatrix propagate(const LindbladGenerator& gen, const ComplexMatrix& m, double duration, double dt) {
  const std::size_t n = step_count(duration, dt);
  ComplexMatrix x = m;
  if (n == 0) return x;
  const double h = duration / static_cast<double>(n);
  for (std::size_t s = 0; s < n; ++s) x = rk4_step(gen, x, h);
  return x;
}

Trajectory integrate(const LindbladGenerator& gen, const DensityOperator& rho0, double t_end, double dt) {
  if (!(t_end > 0.0) || !(dt > 0.0) || dt > t_end) {
    throw std::invalid_argument(fmt::format("integrate: need t_end > 0 and 0 < dt <= t_end (t_end={}, dt={})", t_end, dt));
  }
  if (!(gen.dims() == rho0.dims())) throw DimensionError("integrate: dims mismatch");
  const std::size_t n = step_count(t_end, dt);
  const double h = t_end / static_cast<double>(n);
  Trajectory traj;
  traj.times.reserve(n + 1);
  traj.states.reserve(n + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);
  ComplexMatrix x = rho0.matrix();
  for (std::size_t s = 1; s <= n; ++s) {
    x = hermitize(rk4_step(gen, x, h));
    const double t = (s == n) ? t_end : static_cast<double>(s) * h;
    traj.states.push_back(checked_state(x, gen.dims(), s, t));
    traj.times.push_back(t);
  }
  return traj;
}

DensityOperator evolve(const LindbladGenerator& gen, const DensityOperator& rho0, double duration, double dt) {
  if (!(gen.dims() == rho0.dims())) throw DimensionError("evolve: dims mismatch");
  const std::size_t n = step_count(duration, dt);
  if (n == 0) return rho0;
  const double h = duration / static_cast<double>(n);
  ComplexMatrix x = rho0.matrix();
  for (std::size_t s = 0; s < n; ++s) x = hermitize(rk4_step(gen, x, h));
  return checked_state(x, gen.dims(), n, duration);
}

LindbladGenerator depolarizing_generator(double rate) {
  const BipartiteDims dims(2, 2);
  std::vector<ComplexMatrix> jumps;
  const double c = std::sqrt(rate / 16.0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != 0 || b != 0) jumps.push_back(c * kron(pauli(a), pauli(b)));
  return {ComplexMatrix::Zero(4, 4), std::move(jumps), dims};
}

LindbladGenerator one_sided_dephasing_generator(double rate) {
  return {ComplexMatrix::Zero(4, 4), {std::sqrt(rate) * kron(pauli(3), pauli(0))}, BipartiteDims(2, 2)};
}

LindbladGenerator amplitude_damping_generator(double rate) {
  ComplexMatrix lower = ComplexMatrix::Zero(2, 2);
  lower(0, 1) = 1.0;
  const double c = std::sqrt(rate);
  return {ComplexMatrix::Zero(4, 4), {c * kron(lower, pauli(0)), c * kron(pauli(0), lower)}, BipartiteDims(2, 2)};
}

}  // namespace ftd
