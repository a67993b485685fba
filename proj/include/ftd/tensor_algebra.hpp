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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ftd {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Carrier for states, unitaries and Kraus
/// operators.
///
/// Index convention (project-wide): the basis vector |j>_A (x) |k>_B sits at
/// row j * d_B + k.
using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;
using RealVector = Eigen::VectorXd;

/// Raised when operand shapes do not match the bipartite structure.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by numerical routines that require Hermitian input.
class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Tensor-factor structure (d_A, d_B), both >= 2.
class BipartiteDims {
 public:
  BipartiteDims(std::size_t dim_a, std::size_t dim_b);

  std::size_t a() const { return dim_a_; }
  std::size_t b() const { return dim_b_; }
  std::size_t total() const { return dim_a_ * dim_b_; }

  /// Throws DimensionError unless m is total() x total().
  void require_square(const ComplexMatrix& m, const char* what) const;

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
};

enum class Subsystem { A, B };

inline constexpr double kHermitianTolerance = 1e-9;
inline constexpr double kJacobiThreshold = 1e-13;

ComplexMatrix identity(std::size_t n);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Traces out `traced` and returns the reduced operator on the other factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, const BipartiteDims& dims, Subsystem traced);

/// Transposes the B-factor indices only.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const BipartiteDims& dims);

double max_abs(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-9);

/// (m + m^dagger) / 2
ComplexMatrix hermitize(const ComplexMatrix& m);

struct HermitianEigen {
  RealVector values;      ///< ascending
  ComplexMatrix vectors;  ///< column i pairs with values[i]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Throws
/// NotHermitianError if max|m - m^dagger| exceeds kHermitianTolerance.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_spectrum(const ComplexMatrix& m);

/// exp(-i * h * t) for Hermitian h, via its eigendecomposition.
ComplexMatrix unitary_evolution(const ComplexMatrix& h, double t);

/// Distance between a and b after removing a global phase; the phase is fixed
/// by aligning the largest-magnitude entry of a.
double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pauli matrices; index 0 is the identity.
ComplexMatrix pauli(int which);

// Matrix text format: "rows cols" header, then rows lines of cols entries
// written as re+imj. Parsing is locale-independent.
ComplexMatrix parse_matrix_text(const std::string& text);
std::string format_matrix_text(const ComplexMatrix& m);
cplx parse_complex(const std::string& token);
std::string format_complex(cplx z);

}  // namespace ftd
