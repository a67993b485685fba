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

// Reference computations for the tests. They lean on Eigen's own solvers and
// on closed forms, never on the library's eigensolver.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ftd/random.hpp"
#include "ftd/states.hpp"

namespace oracle {

using ftd::ComplexMatrix;
using ftd::ComplexVector;
using ftd::cplx;

inline Eigen::VectorXd eigenvalues(const ComplexMatrix& m) {
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

/// rho^{T_B} written out entry by entry.
inline ComplexMatrix partial_transpose_b(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t l = 0; l < db; ++l) {
          out(static_cast<Eigen::Index>(i * db + k), static_cast<Eigen::Index>(j * db + l)) =
              rho(static_cast<Eigen::Index>(i * db + l), static_cast<Eigen::Index>(j * db + k));
        }
  return out;
}

inline double min_pt_eigenvalue(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
  return eigenvalues(partial_transpose_b(rho, da, db)).minCoeff();
}

/// Second singular value of the reshaped vector, from the eigenvalues of M M^dagger.
inline double second_schmidt(const ComplexVector& v, std::size_t da, std::size_t db) {
  ComplexMatrix m(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t k = 0; k < db; ++k)
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = v(static_cast<Eigen::Index>(j * db + k));
  const Eigen::VectorXd ev = eigenvalues(m * m.adjoint());
  if (ev.size() < 2) return 0.0;
  return std::sqrt(std::max(0.0, ev(ev.size() - 2)));
}

/// Product for every sampled z = e^{i theta} on a uniform grid.
inline bool phase_family_sampled(const ComplexVector& phi, const ComplexVector& psi, std::size_t da, std::size_t db,
                                 int points = 720, double tol = 1e-7) {
  for (int k = 0; k < points; ++k) {
    const double theta = 2.0 * M_PI * k / points;
    const ComplexVector v = phi + std::polar(1.0, theta) * psi;
    if (second_schmidt(v, da, db) > tol) return false;
  }
  return true;
}

/// Two-qubit depolarizing semigroup with unit-rate weight: e^{-t} rho0 + (1 - e^{-t}) I/4.
inline ComplexMatrix depolarized(const ComplexMatrix& rho0, double t) {
  const double w = std::exp(-t);
  return w * rho0 + (1.0 - w) * ComplexMatrix::Identity(rho0.rows(), rho0.cols()) / static_cast<double>(rho0.rows());
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Minimum over global phases of |a - e^{i phi} b|_F, via the optimal phase arg <b, a>.
inline double phase_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const cplx overlap = (b.adjoint() * a).trace();
  const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx(1.0, 0.0);
  return (a - phase * b).norm();
}

inline ComplexMatrix swap(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d * d);
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) s(static_cast<Eigen::Index>(k * d + j), static_cast<Eigen::Index>(j * d + k)) = 1.0;
  return s;
}

inline ComplexVector oracle_kron_vec(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

/// Pairs for the phase-family test: shared A factor, shared B factor,
/// collinear, independent products and random vectors, in rotation.
inline std::pair<ComplexVector, ComplexVector> structured_pair(std::size_t da, std::size_t db, std::size_t kind,
                                                               ftd::Rng& rng) {
  const ComplexVector a = ftd::haar_vector(da, rng);
  const ComplexVector b = ftd::haar_vector(db, rng);
  switch (kind % 5) {
    case 0: return {oracle_kron_vec(a, b), oracle_kron_vec(a, ftd::haar_vector(db, rng))};
    case 1: return {oracle_kron_vec(a, b), oracle_kron_vec(ftd::haar_vector(da, rng), b)};
    case 2: {
      const ComplexVector p = oracle_kron_vec(a, b);
      return {p, std::polar(1.0, 2.0 * M_PI * std::uniform_real_distribution<double>(0, 1)(rng)) * p};
    }
    case 3: return {oracle_kron_vec(a, b), oracle_kron_vec(ftd::haar_vector(da, rng), ftd::haar_vector(db, rng))};
    default: return {ftd::haar_vector(da * db, rng), ftd::haar_vector(da * db, rng)};
  }
}

}  // namespace oracle
