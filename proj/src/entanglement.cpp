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

#include "ftd/entanglement.hpp"

namespace ftd {

std::string to_string(Separability s) {
  switch (s) {
    case Separability::Entangled: return "Entangled";
    case Separability::SeparableBoundary: return "SeparableBoundary";
    case Separability::SeparableInterior: return "SeparableInterior";
  }
  return "?";
}

double min_pt_eigenvalue(const ComplexMatrix& rho, const BipartiteDims& dims) {
  return hermitian_eigen(partial_transpose(rho, dims)).values(0);
}

double min_pt_eigenvalue(const DensityOperator& rho) { return min_pt_eigenvalue(rho.matrix(), rho.dims()); }

double negativity(const ComplexMatrix& rho, const BipartiteDims& dims) {
  const auto values = hermitian_eigen(partial_transpose(rho, dims)).values;
  double sum = 0.0;
  // Eigensolver noise on PPT states must not show up as negativity.
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (values(i) < -kEntangledTolerance) sum -= values(i);
  return sum;
}

double negativity(const DensityOperator& rho) { return negativity(rho.matrix(), rho.dims()); }

EntanglementVerdict classify_separability(const DensityOperator& rho) {
  const auto pt_values = hermitian_eigen(partial_transpose(rho.matrix(), rho.dims())).values;
  EntanglementVerdict v;
  v.lambda_minus = pt_values(0);
  const BipartiteDims& d = rho.dims();
  const bool ppt_decides = d.total() <= 6;  // (2,2), (2,3), (3,2)
  if (v.lambda_minus < -kEntangledTolerance) {
    v.classification = Separability::Entangled;
    for (Eigen::Index i = 0; i < pt_values.size(); ++i)
      if (pt_values(i) < -kEntangledTolerance) v.negativity -= pt_values(i);
    v.definitive = true;
    return v;
  }
  const double min_eig = hermitian_eigen(rho.matrix()).values(0);
  v.classification = (min_eig > kInteriorTolerance && v.lambda_minus > kInteriorTolerance)
                         ? Separability::SeparableInterior
                         : Separability::SeparableBoundary;
  v.definitive = ppt_decides;
  return v;
}

double entanglement_mixing_threshold(const DensityOperator& rho) {
  if (min_pt_eigenvalue(rho) >= -kEntangledTolerance) return 0.0;
  double lo = 0.0;  // NPT
  double hi = 1.0;  // PPT: maximally mixed
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (min_pt_eigenvalue(isotropic_mix(rho, mid)) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace ftd
