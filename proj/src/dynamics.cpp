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

#include "ftd/dynamics.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "ftd/kernels.hpp"

namespace ftd {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Dynamics::Dynamics(Kind kind, BipartiteDims dims, double horizon) : kind_(std::move(kind)), dims_(dims), horizon_(horizon) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw std::invalid_argument("dynamics: horizon must be positive");
  if (const auto* s = std::get_if<LindbladSemigroup>(&kind_)) {
    if (!(s->generator.dims() == dims_)) throw DimensionError("dynamics: generator dims differ");
    if (!(s->dt > 0.0)) throw std::invalid_argument("dynamics: dt must be positive");
  }
}

namespace {

void require_in_range(const Dynamics& dyn, double t) {
  if (!(t >= 0.0) || t > dyn.horizon() * (1.0 + 1e-12)) {
    throw std::out_of_range(fmt::format("time {} outside [0, {}]", t, dyn.horizon()));
  }
}

std::vector<ComplexMatrix> matrix_units(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<ComplexMatrix> out;
  out.reserve(d * d);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(j, k) = 1.0;
      out.push_back(std::move(e));
    }
  return out;
}

// Choi matrix C = sum_jk |j><k| (x) Lambda(|j><k|); its eigenvectors give Kraus
// operators K_{aj} = sqrt(mu) v(j d + a).
Channel channel_from_unit_images(const std::vector<ComplexMatrix>& images, const BipartiteDims& dims) {
  const auto n = static_cast<Eigen::Index>(dims.total());
  ComplexMatrix choi(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) choi.block(j * n, k * n, n, n) = images[static_cast<std::size_t>(j * n + k)];
  const auto eig = hermitian_eigen(hermitize(choi));
  std::vector<ComplexMatrix> kraus;
  const double cutoff = 1e-13 * static_cast<double>(n);
  for (Eigen::Index i = eig.values.size() - 1; i >= 0; --i) {
    const double mu = eig.values(i);
    if (mu <= cutoff) break;
    ComplexMatrix kop(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index a = 0; a < n; ++a) kop(a, j) = std::sqrt(mu) * eig.vectors(j * n + a, i);
    kraus.push_back(std::move(kop));
  }
  return Channel(std::move(kraus), dims);
}

}  // namespace

Channel channel_at(const Dynamics& dyn, double t) {
  require_in_range(dyn, t);
  return std::visit(
      overloaded{
          [&](const LindbladSemigroup& s) {
            if (t == 0.0) return Channel::identity(dyn.dims().total(), dyn.dims());
            const auto units = matrix_units(dyn.dims().total());
            return channel_from_unit_images(kernels::parallel::propagate_batch(s.generator, units, t, s.dt), dyn.dims());
          },
          [&](const UnitaryFamily& f) { return Channel::unitary(f.unitary(t), dyn.dims()); },
          [&](const ChannelFamily& f) { return f.channel(t); },
      },
      dyn.kind());
}

std::vector<Channel> channels_at(const Dynamics& dyn, std::span<const double> times) {
  for (const double t : times) require_in_range(dyn, t);
  std::vector<Channel> out;
  out.reserve(times.size());
  if (const auto* s = std::get_if<LindbladSemigroup>(&dyn.kind())) {
    auto images = matrix_units(dyn.dims().total());
    double now = 0.0;
    for (const double t : times) {
      if (t < now) throw std::invalid_argument("channels_at: times must be ascending");
      if (t > now) images = kernels::parallel::propagate_batch(s->generator, images, t - now, s->dt);
      now = t;
      out.push_back(t == 0.0 ? Channel::identity(dyn.dims().total(), dyn.dims())
                             : channel_from_unit_images(images, dyn.dims()));
    }
    return out;
  }
  for (const double t : times) out.push_back(channel_at(dyn, t));
  return out;
}

DensityOperator state_at(const Dynamics& dyn, const DensityOperator& rho0, double t) {
  require_in_range(dyn, t);
  if (const auto* s = std::get_if<LindbladSemigroup>(&dyn.kind())) return evolve(s->generator, rho0, t, s->dt);
  return apply(channel_at(dyn, t), rho0);
}

std::vector<DensityOperator> states_at(const Dynamics& dyn, const DensityOperator& rho0, std::span<const double> times) {
  for (const double t : times) require_in_range(dyn, t);
  if (const auto* s = std::get_if<LindbladSemigroup>(&dyn.kind())) {
    std::vector<DensityOperator> out;
    out.reserve(times.size());
    DensityOperator current = rho0;
    double now = 0.0;
    for (const double t : times) {
      if (t < now) throw std::invalid_argument("states_at: times must be ascending");
      if (t > now) current = evolve(s->generator, current, t - now, s->dt);
      now = t;
      out.push_back(current);
    }
    return out;
  }
  // Independent time points: evaluate the maps in parallel, then validate.
  std::vector<ComplexMatrix> raw(times.size());
  std::vector<std::exception_ptr> errors(times.size());
  const auto count = static_cast<long long>(times.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      raw[k] = channel_at(dyn, times[k]).apply(rho0.matrix());
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<DensityOperator> out;
  out.reserve(times.size());
  for (auto& m : raw) out.emplace_back(std::move(m), rho0.dims());
  return out;
}

DensityOperator advance_state(const Dynamics& dyn, const DensityOperator& rho0, const DensityOperator& at_from,
                              double from, double to) {
  if (const auto* s = std::get_if<LindbladSemigroup>(&dyn.kind())) {
    require_in_range(dyn, to);
    return evolve(s->generator, at_from, to - from, s->dt);
  }
  return state_at(dyn, rho0, to);
}

std::vector<double> uniform_grid(double horizon, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  std::vector<double> t(samples);
  for (std::size_t i = 0; i < samples; ++i) t[i] = horizon * static_cast<double>(i) / static_cast<double>(samples - 1);
  t.back() = horizon;
  return t;
}

ContinuityReport check_dynamics(const Dynamics& dyn, double modulus, std::size_t probes) {
  const BipartiteDims& dims = dyn.dims();
  std::vector<DensityOperator> probe_states;
  for (std::size_t j = 0; j < dims.a(); ++j)
    for (std::size_t k = 0; k < dims.b(); ++k) probe_states.push_back(DensityOperator::from_pure(PureState::basis(dims, j, k)));
  probe_states.push_back(DensityOperator::from_pure(maximally_entangled(dims)));

  ContinuityReport report;
  const auto grid = uniform_grid(dyn.horizon(), probes + 1);
  report.step = grid[1] - grid[0];
  const Channel at_zero = channel_at(dyn, 0.0);
  for (const auto& rho : probe_states) {
    report.identity_defect = std::max(report.identity_defect, max_abs(at_zero.apply(rho.matrix()) - rho.matrix()));
    const auto path = states_at(dyn, rho, grid);
    for (std::size_t i = 1; i < path.size(); ++i) {
      report.max_increment = std::max(report.max_increment, max_abs(path[i].matrix() - path[i - 1].matrix()));
    }
  }
  report.ok = report.identity_defect <= 1e-9 && report.max_increment <= modulus * report.step;
  return report;
}

Dynamics lindblad_dynamics(LindbladGenerator gen, double horizon, double dt) {
  const BipartiteDims dims = gen.dims();
  return {LindbladSemigroup{std::move(gen), dt}, dims, horizon};
}

Dynamics depolarizing_dynamics(double rate, double horizon, double dt) {
  return lindblad_dynamics(depolarizing_generator(rate), horizon, dt);
}

Dynamics one_sided_dephasing_dynamics(double rate, double horizon, double dt) {
  return lindblad_dynamics(one_sided_dephasing_generator(rate), horizon, dt);
}

Dynamics amplitude_damping_dynamics(double rate, double horizon, double dt) {
  return lindblad_dynamics(amplitude_damping_generator(rate), horizon, dt);
}

Dynamics hamiltonian_dynamics(const ComplexMatrix& h, BipartiteDims dims, double horizon) {
  dims.require_square(h, "hamiltonian_dynamics");
  const auto eig = hermitian_eigen(h);
  UnitaryFamily family{[eig](double t) {
    ComplexVector phases(eig.values.size());
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) phases(k) = std::exp(cplx(0.0, -eig.values(k) * t));
    return ComplexMatrix(eig.vectors * phases.asDiagonal() * eig.vectors.adjoint());
  }};
  return {std::move(family), dims, horizon};
}

Dynamics local_rotations_dynamics(double horizon) {
  UnitaryFamily family{[](double t) {
    // exp(-i sigma t) = cos t I - i sin t sigma for any Pauli sigma.
    const cplx minus_i(0.0, -1.0);
    const ComplexMatrix ua = std::cos(t) * pauli(0) + minus_i * std::sin(t) * pauli(3);
    const ComplexMatrix ub = std::cos(t) * pauli(0) + minus_i * std::sin(t) * pauli(1);
    return kron(ua, ub);
  }};
  return {std::move(family), BipartiteDims(2, 2), horizon};
}

Dynamics cnot_pulse_dynamics(double horizon) {
  ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  const ComplexMatrix h = 0.5 * std::numbers::pi * (identity(4) - cnot);
  return hamiltonian_dynamics(h, BipartiteDims(2, 2), horizon);
}

Dynamics partial_swap_dynamics(std::size_t d, double horizon) {
  const BipartiteDims dims(d, d);
  return hamiltonian_dynamics(swap_operator(dims), dims, horizon);
}

Dynamics channel_ramp_dynamics(const Channel& target, double t_target, double horizon) {
  if (!target.dims()) throw DimensionError("channel_ramp_dynamics: target channel needs bipartite dims");
  if (!(t_target > 0.0)) throw std::invalid_argument("channel_ramp_dynamics: t_target must be positive");
  const BipartiteDims dims = *target.dims();
  ChannelFamily family{[target, t_target, dims](double t) {
    const double s = std::min(t / t_target, 1.0);
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::sqrt(1.0 - s) * identity(dims.total()));
    for (const auto& k : target.kraus()) kraus.push_back(std::sqrt(s) * k);
    return Channel(std::move(kraus), dims);
  }};
  return {std::move(family), dims, horizon};
}

Dynamics identity_dynamics(BipartiteDims dims, double horizon) {
  UnitaryFamily family{[n = dims.total()](double) { return identity(n); }};
  return {std::move(family), dims, horizon};
}

}  // namespace ftd
