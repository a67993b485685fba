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

#include "ftd/ftd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "ftd/random.hpp"

namespace ftd {

std::string to_string(FtdMethod m) {
  switch (m) {
    case FtdMethod::Scan: return "scan";
    case FtdMethod::ClosedWitness: return "closed_witness";
    case FtdMethod::UnitalWitness: return "unital_witness";
  }
  return "unknown";
}

std::string to_string(DynamicsVerdict v) {
  switch (v) {
    case DynamicsVerdict::AllLocalUnitary: return "AllLocalUnitary";
    case DynamicsVerdict::ExhibitsFtd: return "ExhibitsFtd";
    case DynamicsVerdict::Undetermined: return "Undetermined";
  }
  return "unknown";
}

EntanglementTrajectory entanglement_trajectory(const Dynamics& dyn, const DensityOperator& rho0,
                                               std::span<const double> times) {
  EntanglementTrajectory traj;
  traj.times.assign(times.begin(), times.end());
  traj.states = states_at(dyn, rho0, times);
  std::vector<ComplexMatrix> raw;
  raw.reserve(traj.states.size());
  for (const auto& s : traj.states) raw.push_back(s.matrix());
  traj.samples = kernels::parallel::evaluate_states(raw, dyn.dims());
  return traj;
}

EntanglementTrajectory entanglement_trajectory(const Dynamics& dyn, const DensityOperator& rho0, std::size_t samples) {
  const auto grid = uniform_grid(dyn.horizon(), samples);
  return entanglement_trajectory(dyn, rho0, grid);
}

namespace {

bool entangled(double lambda_minus) { return lambda_minus < -kEntangledTolerance; }

// Bisects [t_lo, t_hi] where the entanglement status differs at the ends.
// Returns the endpoint of the final bracket on the non-entangled side.
double refine_crossing(const Dynamics& dyn, const DensityOperator& rho0, DensityOperator lo_state, double t_lo,
                       double t_hi, bool lo_entangled) {
  while (t_hi - t_lo > kCrossingResolution) {
    const double mid = 0.5 * (t_lo + t_hi);
    DensityOperator mid_state = advance_state(dyn, rho0, lo_state, t_lo, mid);
    if (entangled(min_pt_eigenvalue(mid_state)) == lo_entangled) {
      t_lo = mid;
      lo_state = std::move(mid_state);
    } else {
      t_hi = mid;
    }
  }
  return lo_entangled ? t_hi : t_lo;
}

std::vector<FtdInterval> scan_intervals(const Dynamics& dyn, const DensityOperator& rho0,
                                        const EntanglementTrajectory& traj) {
  std::vector<FtdInterval> out;
  const std::size_t n = traj.times.size();
  std::size_t i = 0;
  while (i < n) {
    if (entangled(traj.samples[i].lambda_minus)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < n && !entangled(traj.samples[i].lambda_minus)) ++i;
    const std::size_t end = i - 1;
    if (start == 0) continue;  // not an FTD interval: no entangled time before it
    FtdInterval iv;
    iv.a = refine_crossing(dyn, rho0, traj.states[start - 1], traj.times[start - 1], traj.times[start], true);
    if (end == n - 1) {
      iv.b = traj.times.back();
      iv.open_ended = true;
    } else {
      iv.b = refine_crossing(dyn, rho0, traj.states[end], traj.times[end], traj.times[end + 1], false);
    }
    out.push_back(iv);
  }
  return out;
}

std::vector<double> scan_grid(const Dynamics& dyn, std::size_t samples, const std::vector<double>& extra) {
  auto grid = uniform_grid(dyn.horizon(), samples);
  for (const double t : extra)
    if (t > 0.0 && t < dyn.horizon()) grid.push_back(t);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

FtdReport scan_report(const Dynamics& dyn, const DensityOperator& witness, FtdMethod method, std::size_t samples,
                      const std::vector<double>& extra) {
  const auto grid = scan_grid(dyn, samples, extra);
  FtdReport report{method, witness, {}, entanglement_trajectory(dyn, witness, grid), std::nullopt};
  report.intervals = scan_intervals(dyn, witness, report.trajectory);
  return report;
}

}  // namespace

std::optional<FtdReport> detect_ftd(const Dynamics& dyn, const DensityOperator& rho0, std::size_t samples,
                                    std::vector<double> extra_times) {
  if (!(rho0.dims() == dyn.dims())) throw DimensionError("detect_ftd: dims mismatch");
  if (classify_separability(rho0).classification != Separability::Entangled) {
    throw NotEntangledError("detect_ftd: initial state is not entangled");
  }
  auto report = scan_report(dyn, rho0, FtdMethod::Scan, samples, extra_times);
  if (report.intervals.empty()) return std::nullopt;
  return report;
}

WitnessOutcome closed_system_witness(const Dynamics& dyn, double t_bar, std::size_t samples) {
  if (!(t_bar > 0.0) || t_bar > dyn.horizon()) return NotApplicable{"t_bar must lie in (0, horizon]"};
  const Channel ch = channel_at(dyn, t_bar);
  const auto u = as_unitary(ch);
  if (!u) return NotApplicable{fmt::format("channel at t = {} is not unitary", t_bar)};

  const auto search = find_entangled_to_product_witness(*u, dyn.dims());
  if (search.status == WitnessStatus::NoWitnessExists) {
    return NotApplicable{fmt::format("unitary at t = {} is local or a local swap", t_bar)};
  }
  if (search.status == WitnessStatus::BudgetExhausted) {
    return NotApplicable{fmt::format("no entangled preimage of a product found at t = {} (best gap {:.3e})", t_bar,
                                     search.schmidt_gap)};
  }

  const auto pure = DensityOperator::from_pure(*search.entangled);
  const double threshold = entanglement_mixing_threshold(pure);
  const double mixing = 0.5 * threshold;
  DensityOperator witness = isotropic_mix(pure, mixing);
  const auto initial = classify_separability(witness);
  const auto image = classify_separability(apply(ch, witness));
  if (initial.classification != Separability::Entangled || image.classification != Separability::SeparableInterior) {
    throw std::logic_error(fmt::format("closed witness failed its own check: initial {}, image {}",
                                       to_string(initial.classification), to_string(image.classification)));
  }

  FtdReport report = scan_report(dyn, witness, FtdMethod::ClosedWitness, samples, {t_bar});
  WitnessDetails details;
  details.t_bar = t_bar;
  details.mixing = 1.0 - mixing;
  details.initial_lambda = initial.lambda_minus;
  details.image_lambda = image.lambda_minus;
  report.details = details;
  return report;
}

WitnessOutcome unital_qubit_witness(const Dynamics& dyn, double t_bar, std::size_t samples, std::uint64_t seed) {
  if (!(dyn.dims() == BipartiteDims(2, 2))) return NotApplicable{"unital witness needs two qubits"};
  if (!(t_bar > 0.0) || t_bar > dyn.horizon()) return NotApplicable{"t_bar must lie in (0, horizon]"};
  const Channel ch = channel_at(dyn, t_bar);
  if (!is_unital(ch)) return NotApplicable{fmt::format("channel at t = {} is not unital", t_bar)};
  if (as_unitary(ch)) return NotApplicable{fmt::format("channel at t = {} is unitary", t_bar)};

  std::vector<PureState> candidates;
  for (auto b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
    candidates.push_back(bell_state(b));
  Rng rng(seed);
  const PureState phi = bell_state(BellState::PhiPlus);
  for (int i = 0; i < 50; ++i) {
    const ComplexMatrix local = kron(haar_unitary(2, rng), haar_unitary(2, rng));
    candidates.push_back(PureState::normalized(local * phi.amplitudes(), dyn.dims()));
  }

  for (const auto& psi : candidates) {
    const auto pure = DensityOperator::from_pure(psi);
    const auto image = apply(ch, pure);
    if (!(image.purity() < 1.0 - kPurityTolerance)) continue;
    const double delta = min_pt_eigenvalue(image);
    if (!(delta > -0.5 + 1e-9)) continue;

    // Mixing with I/4 shifts every partial-transpose eigenvalue by the same
    // amount, so lambda_minus of p rho + (1-p) I/4 is p lambda + (1-p)/4.
    const double lo = 1.0 / 3.0;
    const double hi = delta < 0.0 ? 1.0 / (1.0 - 4.0 * delta) : 1.0;
    const double p = 0.5 * (lo + hi);
    DensityOperator witness = isotropic_mix(pure, 1.0 - p);
    const auto initial = classify_separability(witness);
    const auto image_verdict = classify_separability(apply(ch, witness));
    if (initial.classification != Separability::Entangled ||
        image_verdict.classification != Separability::SeparableInterior) {
      throw std::logic_error(fmt::format("unital witness failed its own check: initial {}, image {}",
                                         to_string(initial.classification), to_string(image_verdict.classification)));
    }

    FtdReport report = scan_report(dyn, witness, FtdMethod::UnitalWitness, samples, {t_bar});
    WitnessDetails details;
    details.t_bar = t_bar;
    details.mixing = p;
    details.initial_lambda = p * -0.5 + (1.0 - p) * 0.25;
    details.image_lambda = p * delta + (1.0 - p) * 0.25;
    details.delta = delta;
    details.window_lo = lo;
    details.window_hi = hi;
    report.details = details;
    return report;
  }
  return NotApplicable{fmt::format("no maximally entangled candidate has a mixed image at t = {}", t_bar)};
}

bool verify_report(const Dynamics& dyn, const FtdReport& report, std::size_t fresh_points) {
  if (report.intervals.empty()) return false;
  if (classify_separability(report.witness_state).classification != Separability::Entangled) return false;
  for (const auto& iv : report.intervals) {
    if (!(iv.a > 0.0) || !(iv.b >= iv.a)) return false;
    for (std::size_t i = 0; i < fresh_points; ++i) {
      const double t = iv.a + (iv.b - iv.a) * (static_cast<double>(i) + 0.5) / static_cast<double>(fresh_points);
      const auto rho = state_at(dyn, report.witness_state, t);
      if (classify_separability(rho).classification == Separability::Entangled) return false;
    }
  }
  return true;
}

namespace {

// Indices ordered from the middle of the grid outward; the ends are the
// least informative (near the identity, or after the dynamics has settled).
std::vector<std::size_t> middle_out(std::size_t n) {
  std::vector<std::size_t> order;
  order.reserve(n);
  const std::size_t mid = n / 2;
  order.push_back(mid);
  for (std::size_t k = 1; order.size() < n; ++k) {
    if (mid + k < n) order.push_back(mid + k);
    if (k <= mid) order.push_back(mid - k);
  }
  return order;
}

std::vector<DensityOperator> scan_candidates(const BipartiteDims& dims) {
  std::vector<DensityOperator> out;
  const auto me = DensityOperator::from_pure(maximally_entangled(dims));
  out.push_back(me);
  if (dims == BipartiteDims(2, 2)) {
    for (auto b : {BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
      out.push_back(DensityOperator::from_pure(bell_state(b)));
  }
  for (const double theta : {std::numbers::pi / 3.0, 3.0 * std::numbers::pi / 8.0, std::numbers::pi / 6.0}) {
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dims.total()));
    v(0) = std::cos(theta);
    v(static_cast<Eigen::Index>(dims.b() + 1)) = std::sin(theta);
    out.push_back(DensityOperator::from_pure(PureState(v, dims)));
  }
  out.push_back(isotropic_mix(me, 0.1));
  return out;
}

constexpr std::size_t kMaxWitnessAttempts = 16;

}  // namespace

DynamicsClass classify_dynamics(const Dynamics& dyn, std::size_t samples) {
  DynamicsClass result;
  const auto grid = uniform_grid(dyn.horizon(), samples);
  const auto channels = channels_at(dyn, grid);
  bool all_local = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SampleClass sc;
    sc.t = grid[i];
    sc.unital = is_unital(channels[i]);
    if (const auto u = as_unitary(channels[i])) {
      sc.tag = classify_product_preserving_unitary(*u, dyn.dims()).tag;
      if (*sc.tag == UnitaryTag::LocalSwap) result.local_swap_instants.push_back(sc.t);
    }
    if (!sc.tag || *sc.tag != UnitaryTag::Local) all_local = false;
    result.samples.push_back(sc);
  }
  if (all_local) {
    result.verdict = DynamicsVerdict::AllLocalUnitary;
    return result;
  }

  auto accept = [&](FtdReport report) {
    if (!verify_report(dyn, report)) return false;
    result.verdict = DynamicsVerdict::ExhibitsFtd;
    result.report = std::move(report);
    return true;
  };

  const auto order = middle_out(grid.size());
  std::size_t attempts = 0;
  for (const std::size_t i : order) {
    const auto& sc = result.samples[i];
    if (sc.t == 0.0 || !sc.tag || *sc.tag != UnitaryTag::NotProductPreserving) continue;
    if (attempts++ >= kMaxWitnessAttempts) break;
    auto outcome = closed_system_witness(dyn, sc.t, samples);
    if (auto* report = std::get_if<FtdReport>(&outcome); report && accept(std::move(*report))) return result;
  }

  if (dyn.dims() == BipartiteDims(2, 2)) {
    attempts = 0;
    for (const std::size_t i : order) {
      const auto& sc = result.samples[i];
      if (sc.t == 0.0 || sc.tag || !sc.unital) continue;
      if (attempts++ >= kMaxWitnessAttempts) break;
      auto outcome = unital_qubit_witness(dyn, sc.t, samples);
      if (auto* report = std::get_if<FtdReport>(&outcome); report && accept(std::move(*report))) return result;
    }
  }

  for (const auto& rho0 : scan_candidates(dyn.dims())) {
    if (auto report = detect_ftd(dyn, rho0, samples); report && accept(std::move(*report))) return result;
  }
  return result;
}

}  // namespace ftd
