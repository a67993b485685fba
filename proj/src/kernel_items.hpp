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

// Per-item bodies shared by the serial and parallel kernels.

#include "ftd/entanglement.hpp"
#include "ftd/kernels.hpp"

namespace ftd::kernels::detail {

inline StateSample sample_state(const ComplexMatrix& rho, const BipartiteDims& dims) {
  const auto pt = hermitian_eigen(partial_transpose(rho, dims)).values;
  StateSample s;
  s.trace = rho.trace().real();
  s.purity = (rho * rho).trace().real();
  s.lambda_minus = pt(0);
  for (Eigen::Index k = 0; k < pt.size(); ++k)
    if (pt(k) < -kEntangledTolerance) s.negativity -= pt(k);
  return s;
}

inline double image_gap(const ComplexMatrix& map, const ComplexVector& v, const BipartiteDims& dims) {
  const auto coeffs = schmidt_coefficients(map * v, dims);
  return coeffs.size() > 1 ? coeffs[1] : 0.0;
}

}  // namespace ftd::kernels::detail
