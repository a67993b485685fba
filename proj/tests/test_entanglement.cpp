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


#include <doctest.h>

#include "ftd/entanglement.hpp"
#include "ftd/random.hpp"
#include "oracles.hpp"

using namespace ftd;

namespace {

DensityOperator werner(double p) {
  return isotropic_mix(DensityOperator::from_pure(bell_state(BellState::PhiPlus)), 1.0 - p);
}

}  // namespace

TEST_CASE("Bell states have lambda_minus -1/2 and negativity 1/2") {
  for (auto b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus}) {
    const auto rho = DensityOperator::from_pure(bell_state(b));
    CHECK(std::abs(min_pt_eigenvalue(rho) + 0.5) < 1e-12);
    CHECK(std::abs(negativity(rho) - 0.5) < 1e-12);
    CHECK(classify_separability(rho).classification == Separability::Entangled);
  }
}

TEST_CASE("Werner family lambda_minus is affine in p") {
  for (double p : {0.0, 0.1, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
    const double expected = p * (-0.5 - 0.25) + 0.25;
    CHECK(std::abs(min_pt_eigenvalue(werner(p)) - expected) < 1e-12);
    CHECK(std::abs(min_pt_eigenvalue(werner(p).matrix(), BipartiteDims(2, 2)) -
                   oracle::min_pt_eigenvalue(werner(p).matrix(), 2, 2)) < 1e-12);
  }
}

TEST_CASE("classification buckets") {
  CHECK(classify_separability(werner(0.2)).classification == Separability::SeparableInterior);
  CHECK(classify_separability(werner(0.5)).classification == Separability::Entangled);
  // Exactly at p = 1/3 the partial transpose is singular.
  CHECK(classify_separability(werner(1.0 / 3.0)).classification == Separability::SeparableBoundary);
  // A pure product state is on the boundary: rho itself is singular.
  CHECK(classify_separability(DensityOperator::from_pure(PureState::basis(BipartiteDims(2, 2), 0, 0))).classification ==
        Separability::SeparableBoundary);
  CHECK(classify_separability(DensityOperator::maximally_mixed(BipartiteDims(3, 3))).classification ==
        Separability::SeparableInterior);
}

TEST_CASE("PPT beyond 2x3 is reported as non-definitive") {
  const auto v = classify_separability(DensityOperator::maximally_mixed(BipartiteDims(3, 3)));
  CHECK_FALSE(v.definitive);
  CHECK(classify_separability(DensityOperator::maximally_mixed(BipartiteDims(2, 3))).definitive);
  CHECK(classify_separability(DensityOperator::from_pure(maximally_entangled(BipartiteDims(3, 3)))).definitive);
}

TEST_CASE("mixing threshold of maximally entangled states is d/(d+1)") {
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto rho = DensityOperator::from_pure(maximally_entangled(BipartiteDims(d, d)));
    const double expected = static_cast<double>(d) / static_cast<double>(d + 1);
    CHECK(std::abs(entanglement_mixing_threshold(rho) - expected) < 1e-9);
  }
  CHECK(entanglement_mixing_threshold(DensityOperator::maximally_mixed(BipartiteDims(2, 2))) == 0.0);
}

TEST_CASE("local unitaries leave lambda_minus and negativity unchanged") {
  Rng rng(77);
  for (auto [da, db] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}}) {
    const BipartiteDims dims(da, db);
    for (int rep = 0; rep < 10; ++rep) {
      const DensityOperator rho(random_density_matrix(da * db, 2, rng), dims);
      const ComplexMatrix u = kron(haar_unitary(da, rng), haar_unitary(db, rng));
      const DensityOperator moved(u * rho.matrix() * u.adjoint(), dims);
      CHECK(std::abs(min_pt_eigenvalue(moved) - min_pt_eigenvalue(rho)) < 1e-11);
      CHECK(std::abs(negativity(moved) - negativity(rho)) < 1e-11);
    }
  }
}

TEST_CASE("negativity equals the sum of negative oracle eigenvalues") {
  Rng rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    const BipartiteDims dims(2, 3);
    const DensityOperator rho(random_density_matrix(6, 1 + rep % 3, rng), dims);
    const Eigen::VectorXd ev = oracle::eigenvalues(oracle::partial_transpose_b(rho.matrix(), 2, 3));
    double neg = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (ev(i) < -kEntangledTolerance) neg -= ev(i);
    CHECK(std::abs(negativity(rho) - neg) < 1e-11);
    CHECK(std::abs(min_pt_eigenvalue(rho) - ev.minCoeff()) < 1e-11);
  }
}

TEST_CASE("verdict strings") {
  CHECK(to_string(Separability::Entangled) == "Entangled");
  CHECK(to_string(Separability::SeparableInterior) == "SeparableInterior");
  CHECK(to_string(Separability::SeparableBoundary) == "SeparableBoundary");
}
