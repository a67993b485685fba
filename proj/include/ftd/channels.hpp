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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ftd/states.hpp"

namespace ftd {

inline constexpr double kTracePreservingTolerance = 1e-9;
inline constexpr double kUnitalTolerance = 1e-9;
inline constexpr double kPurityTolerance = 1e-9;
inline constexpr double kFactorTolerance = 1e-8;
inline constexpr double kWitnessGap = 1e-4;
inline constexpr double kProjectorGap = 1e-6;
inline constexpr std::size_t kDefaultPurityTrials = 500;

class InvalidChannelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotUnitaryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// CPTP map in Kraus form. Trace preservation is checked at construction.
class Channel {
 public:
  explicit Channel(std::vector<ComplexMatrix> kraus, std::optional<BipartiteDims> dims = std::nullopt);

  static Channel unitary(const ComplexMatrix& u, std::optional<BipartiteDims> dims = std::nullopt);
  static Channel identity(std::size_t dimension, std::optional<BipartiteDims> dims = std::nullopt);

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const std::optional<BipartiteDims>& dims() const { return dims_; }
  std::size_t dimension() const { return static_cast<std::size_t>(kraus_.front().rows()); }

  /// sum_i K_i m K_i^dagger on an arbitrary operator.
  ComplexMatrix apply(const ComplexMatrix& m) const;

 private:
  std::vector<ComplexMatrix> kraus_;
  std::optional<BipartiteDims> dims_;
};

DensityOperator apply(const Channel& ch, const DensityOperator& rho);

bool is_unital(const Channel& ch);

/// Number of linearly independent Kraus operators (rank of the Gram matrix
/// Tr(K_i^dagger K_j), equivalently of the Choi matrix).
std::size_t effective_kraus_rank(const Channel& ch, double tol = 1e-9);

/// The unitary U with ch(rho) = U rho U^dagger when the channel has a single
/// effective Kraus operator that is unitary.
std::optional<ComplexMatrix> as_unitary(const Channel& ch);

struct PurityCheck {
  bool preserving = true;
  std::optional<ComplexVector> witness;  ///< first input whose image is mixed
  double witness_purity = 1.0;
  std::size_t states_checked = 0;
};

/// Probabilistic test. Always checks the d^2 basis and pairwise superposition
/// states (|j> + |k>, |j> + i|k>), then `trials` Haar-random states drawn
/// from `seed`. A pass is evidence, not proof.
PurityCheck is_pure_state_preserving(const Channel& ch, std::size_t trials = kDefaultPurityTrials,
                                      std::uint64_t seed = 0);

/// S |j>|k> = |k>|j>. Requires d_A = d_B.
ComplexMatrix swap_operator(const BipartiteDims& dims);

enum class UnitaryTag { Local, LocalSwap, NotProductPreserving };

std::string to_string(UnitaryTag tag);

struct UnitaryClass {
  UnitaryTag tag = UnitaryTag::NotProductPreserving;
  /// (U_A, U_B): U = U_A (x) U_B for Local, U = (U_A (x) U_B) S for LocalSwap.
  std::optional<std::pair<ComplexMatrix, ComplexMatrix>> factors;
  std::string reason;  ///< why the unitary was rejected, empty otherwise
};

/// Decides whether u maps product vectors to product vectors and, if so,
/// extracts local factors. Throws NotUnitaryError on non-unitary input.
UnitaryClass classify_product_preserving_unitary(const ComplexMatrix& u, const BipartiteDims& dims);

enum class ReconstructionFailure { NotUnital, NotPurePreserving, PhaseInconsistent };

std::string to_string(ReconstructionFailure f);

class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(ReconstructionFailure kind, const std::string& what,
                      std::optional<ComplexVector> witness = std::nullopt)
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  ReconstructionFailure kind() const { return kind_; }
  const std::optional<ComplexVector>& witness() const { return witness_; }

 private:
  ReconstructionFailure kind_;
  std::optional<ComplexVector> witness_;
};

/// Recovers V with ch(rho) = V rho V^dagger from a unital, pure-state
/// preserving channel. Throws ReconstructionError otherwise.
ComplexMatrix reconstruct_unitary_from_channel(const Channel& ch);

enum class WitnessStatus { Found, NoWitnessExists, BudgetExhausted };

std::string to_string(WitnessStatus s);

struct WitnessSearch {
  WitnessStatus status = WitnessStatus::NoWitnessExists;
  std::optional<PureState> entangled;  ///< psi_E = u^dagger psi_P
  std::optional<PureState> product;    ///< psi_P
  double schmidt_gap = 0.0;            ///< second Schmidt coefficient of psi_E
  std::size_t candidates_tried = 0;
};

/// Single-factor probe states: |j>, then (|j> + w|k>)/sqrt2 for j < k and
/// w in {1, i, -1, -i}. For a qubit these are the six Pauli eigenstates.
std::vector<ComplexVector> local_probe_states(std::size_t dim);

/// Looks for a product psi_P whose preimage under u is entangled: first over
/// the product grid of local_probe_states, then over `budget` Haar-random
/// product states drawn from `seed`.
WitnessSearch find_entangled_to_product_witness(const ComplexMatrix& u, const BipartiteDims& dims,
                                                std::size_t budget = 2000, std::uint64_t seed = 0);

// Standard channels used by tests, scenarios and the CLI.

/// Two-qubit global depolarizing: (1 - q) rho + q I/4, via the 16 Paulis.
Channel depolarizing_channel(double q);
/// {sqrt(1-q) I, sqrt(q) sigma_z (x) I} on two qubits.
Channel one_sided_dephasing_channel(double q);
/// Single-qubit amplitude damping {|0><0| + sqrt(1-g)|1><1|, sqrt(g)|0><1|}.
Channel amplitude_damping_channel(double gamma);
/// rho -> |phi0><phi0| with Kraus {|phi0><k|}.
Channel constant_channel(const ComplexVector& phi0, std::optional<BipartiteDims> dims = std::nullopt);

}  // namespace ftd
