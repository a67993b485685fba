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

#include <string>

#include "ftd/states.hpp"

namespace ftd {

inline constexpr double kEntangledTolerance = 1e-9;
inline constexpr double kInteriorTolerance = 1e-9;

enum class Separability { Entangled, SeparableBoundary, SeparableInterior };

std::string to_string(Separability s);

struct EntanglementVerdict {
  double lambda_minus = 0.0;
  double negativity = 0.0;
  Separability classification = Separability::SeparableBoundary;
  /// False when the dims are beyond 2x3 and the state is PPT: PPT is then
  /// only necessary for separability, so the Separable* tag means "PPT".
  bool definitive = true;
};

/// Smallest eigenvalue of the partial transpose.
double min_pt_eigenvalue(const DensityOperator& rho);
double min_pt_eigenvalue(const ComplexMatrix& rho, const BipartiteDims& dims);

/// Sum of |mu| over partial-transpose eigenvalues mu < -tau_ent, so
/// eigensolver noise around zero does not count.
double negativity(const DensityOperator& rho);
double negativity(const ComplexMatrix& rho, const BipartiteDims& dims);

/// Entangled if lambda_minus < -tau_ent. SeparableInterior if rho > tau_int
/// and rho^{T_B} > tau_int (both open conditions, so the state sits inside a
/// ball of PPT states). SeparableBoundary otherwise.
EntanglementVerdict classify_separability(const DensityOperator& rho);

/// Smallest lambda such that isotropic_mix(rho, lambda) is PPT, found by
/// bisection on lambda_minus. Returns 0 for PPT input.
double entanglement_mixing_threshold(const DensityOperator& rho);

}  // namespace ftd
