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

#include <stdexcept>
#include <vector>

#include "ftd/tensor_algebra.hpp"

namespace ftd {

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kStateTolerance = 1e-9;
inline constexpr double kSchmidtTolerance = 1e-8;
inline constexpr double kPolyTolerance = 1e-9;

class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unit vector on C^{d_A} (x) C^{d_B}.
class PureState {
 public:
  /// Throws InvalidStateError unless |amplitudes| = 1 within kNormTolerance.
  PureState(ComplexVector amplitudes, BipartiteDims dims);

  /// Rescales to unit norm; throws on the zero vector.
  static PureState normalized(const ComplexVector& amplitudes, BipartiteDims dims);
  static PureState product(const ComplexVector& a, const ComplexVector& b);
  static PureState basis(BipartiteDims dims, std::size_t j, std::size_t k);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const BipartiteDims& dims() const { return dims_; }

  /// Reshaped d_A x d_B coefficient matrix, M(j, k) = <jk|psi>.
  ComplexMatrix coefficient_matrix() const;
  ComplexMatrix projector() const;

 private:
  ComplexVector amplitudes_;
  BipartiteDims dims_;
};

/// Hermitian, unit-trace, positive semidefinite operator on the bipartite
/// space. Validation runs at construction with tolerance `tol` on each of
/// the three conditions.
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, BipartiteDims dims, double tol = kStateTolerance);

  static DensityOperator from_pure(const PureState& psi);
  static DensityOperator maximally_mixed(BipartiteDims dims);

  const ComplexMatrix& matrix() const { return matrix_; }
  const BipartiteDims& dims() const { return dims_; }

  double trace() const { return matrix_.trace().real(); }
  double purity() const;

 private:
  ComplexMatrix matrix_;
  BipartiteDims dims_;
};

struct SchmidtDecomposition {
  std::vector<double> coefficients;         ///< nonincreasing, only those > kSchmidtTolerance
  std::vector<ComplexVector> left_vectors;  ///< on A
  std::vector<ComplexVector> right_vectors; ///< on B

  std::size_t rank() const { return coefficients.size(); }
};

SchmidtDecomposition schmidt_decompose(const PureState& psi);

/// All min(d_A, d_B) singular values of the reshaped vector, nonincreasing.
/// The vector need not be normalized.
std::vector<double> schmidt_coefficients(const ComplexVector& amplitudes, const BipartiteDims& dims);

bool is_product(const PureState& psi);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Phi(+/-) = (|00> +/- |11>)/sqrt2, Psi(+/-) = (|01> +/- |10>)/sqrt2.
PureState bell_state(BellState which);

/// sum_j |jj> / sqrt(min(d_A, d_B))
PureState maximally_entangled(BipartiteDims dims);

/// lambda * I / (d_A d_B) + (1 - lambda) * rho, lambda in [0, 1].
DensityOperator isotropic_mix(const DensityOperator& rho, double lambda);

/// True iff phi + z psi has Schmidt rank <= 1 for every |z| = 1.
///
/// Every 2x2 minor of M_phi + z M_psi is a quadratic in z. A nonzero quadratic
/// vanishes at no more than two points of the unit circle, so the family is
/// product on the whole circle exactly when all minor coefficients vanish.
bool phase_family_all_product(const PureState& phi, const PureState& psi);

}  // namespace ftd
