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

#include "ftd/states.hpp"

#include <cmath>

#include <fmt/format.h>

namespace ftd {

PureState::PureState(ComplexVector amplitudes, BipartiteDims dims) : amplitudes_(std::move(amplitudes)), dims_(dims) {
  if (static_cast<std::size_t>(amplitudes_.size()) != dims_.total()) {
    throw DimensionError(fmt::format("pure state: {} amplitudes for dims ({}, {})", amplitudes_.size(), dims_.a(),
                                     dims_.b()));
  }
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    throw InvalidStateError(fmt::format("pure state: norm {:.17g} is not 1", norm));
  }
}

PureState PureState::normalized(const ComplexVector& amplitudes, BipartiteDims dims) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidStateError("pure state: cannot normalize a zero vector");
  return {amplitudes / norm, dims};
}

PureState PureState::product(const ComplexVector& a, const ComplexVector& b) {
  return normalized(kron(a, b), BipartiteDims(static_cast<std::size_t>(a.size()), static_cast<std::size_t>(b.size())));
}

PureState PureState::basis(BipartiteDims dims, std::size_t j, std::size_t k) {
  if (j >= dims.a() || k >= dims.b()) throw DimensionError("basis state index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dims.total()));
  v(static_cast<Eigen::Index>(j * dims.b() + k)) = 1.0;
  return {v, dims};
}

ComplexMatrix PureState::coefficient_matrix() const {
  const auto da = static_cast<Eigen::Index>(dims_.a());
  const auto db = static_cast<Eigen::Index>(dims_.b());
  ComplexMatrix m(da, db);
  for (Eigen::Index j = 0; j < da; ++j)
    for (Eigen::Index k = 0; k < db; ++k) m(j, k) = amplitudes_(j * db + k);
  return m;
}

ComplexMatrix PureState::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

DensityOperator::DensityOperator(ComplexMatrix matrix, BipartiteDims dims, double tol)
    : matrix_(std::move(matrix)), dims_(dims) {
  dims_.require_square(matrix_, "density operator");
  for (Eigen::Index i = 0; i < matrix_.size(); ++i) {
    const cplx z = matrix_.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InvalidStateError("density operator: non-finite entry");
  }
  const double defect = hermiticity_defect(matrix_);
  if (defect > tol) throw InvalidStateError(fmt::format("density operator: not Hermitian (defect {:.3e})", defect));
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > tol) throw InvalidStateError(fmt::format("density operator: trace {:.17g} is not 1", tr));
  matrix_ = hermitize(matrix_);
  const double min_eig = hermitian_eigen(matrix_).values(0);
  if (min_eig < -tol) {
    throw InvalidStateError(fmt::format("density operator: negative eigenvalue {:.3e}", min_eig));
  }
}

DensityOperator DensityOperator::from_pure(const PureState& psi) { return {psi.projector(), psi.dims()}; }

DensityOperator DensityOperator::maximally_mixed(BipartiteDims dims) {
  return {identity(dims.total()) / static_cast<double>(dims.total()), dims};
}

double DensityOperator::purity() const { return (matrix_ * matrix_).trace().real(); }

std::vector<double> schmidt_coefficients(const ComplexVector& amplitudes, const BipartiteDims& dims) {
  if (static_cast<std::size_t>(amplitudes.size()) != dims.total()) throw DimensionError("schmidt: size mismatch");
  const auto da = static_cast<Eigen::Index>(dims.a());
  const auto db = static_cast<Eigen::Index>(dims.b());
  ComplexMatrix m(da, db);
  for (Eigen::Index j = 0; j < da; ++j)
    for (Eigen::Index k = 0; k < db; ++k) m(j, k) = amplitudes(j * db + k);
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

SchmidtDecomposition schmidt_decompose(const PureState& psi) {
  Eigen::JacobiSVD<ComplexMatrix> svd(psi.coefficient_matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  SchmidtDecomposition out;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) <= kSchmidtTolerance) break;
    out.coefficients.push_back(s(i));
    out.left_vectors.emplace_back(svd.matrixU().col(i));
    // M = U S V^dagger, so psi = sum_i s_i u_i (x) conj(v_i).
    out.right_vectors.emplace_back(svd.matrixV().col(i).conjugate());
  }
  return out;
}

bool is_product(const PureState& psi) { return schmidt_decompose(psi).rank() == 1; }

PureState bell_state(BellState which) {
  const BipartiteDims dims(2, 2);
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(4);
  switch (which) {
    case BellState::PhiPlus: v(0) = h; v(3) = h; break;
    case BellState::PhiMinus: v(0) = h; v(3) = -h; break;
    case BellState::PsiPlus: v(1) = h; v(2) = h; break;
    case BellState::PsiMinus: v(1) = h; v(2) = -h; break;
  }
  return {v, dims};
}

PureState maximally_entangled(BipartiteDims dims) {
  const std::size_t m = std::min(dims.a(), dims.b());
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dims.total()));
  for (std::size_t j = 0; j < m; ++j) v(static_cast<Eigen::Index>(j * dims.b() + j)) = 1.0 / std::sqrt(double(m));
  return {v, dims};
}

DensityOperator isotropic_mix(const DensityOperator& rho, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument(fmt::format("isotropic_mix: lambda = {} outside [0, 1]", lambda));
  }
  const auto d = rho.dims().total();
  ComplexMatrix m = lambda * identity(d) / static_cast<double>(d) + (1.0 - lambda) * rho.matrix();
  return {std::move(m), rho.dims()};
}

bool phase_family_all_product(const PureState& phi, const PureState& psi) {
  if (!(phi.dims() == psi.dims())) throw DimensionError("phase_family_all_product: dims mismatch");
  const ComplexMatrix a = phi.coefficient_matrix();
  const ComplexMatrix b = psi.coefficient_matrix();
  for (Eigen::Index r1 = 0; r1 < a.rows(); ++r1)
    for (Eigen::Index r2 = r1 + 1; r2 < a.rows(); ++r2)
      for (Eigen::Index c1 = 0; c1 < a.cols(); ++c1)
        for (Eigen::Index c2 = c1 + 1; c2 < a.cols(); ++c2) {
          // det [[a11 + z b11, a12 + z b12], [a21 + z b21, a22 + z b22]]
          const cplx a11 = a(r1, c1), a12 = a(r1, c2), a21 = a(r2, c1), a22 = a(r2, c2);
          const cplx b11 = b(r1, c1), b12 = b(r1, c2), b21 = b(r2, c1), b22 = b(r2, c2);
          const cplx quadratic = b11 * b22 - b12 * b21;
          const cplx linear = a11 * b22 + b11 * a22 - a12 * b21 - b12 * a21;
          const cplx constant = a11 * a22 - a12 * a21;
          if (std::abs(quadratic) > kPolyTolerance || std::abs(linear) > kPolyTolerance ||
              std::abs(constant) > kPolyTolerance) {
            return false;
          }
        }
  return true;
}

}  // namespace ftd
