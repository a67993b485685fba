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

#include "ftd/channels.hpp"
#include "ftd/entanglement.hpp"
#include "ftd/random.hpp"
#include "oracles.hpp"

using namespace ftd;

namespace {

ComplexMatrix cnot() {
  ComplexMatrix c = ComplexMatrix::Zero(4, 4);
  c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1.0;
  return c;
}

}  // namespace

TEST_CASE("Kraus sets must be trace preserving") {
  CHECK_NOTHROW(Channel({identity(4)}, BipartiteDims(2, 2)));
  CHECK_THROWS_AS(Channel({0.5 * identity(4)}, BipartiteDims(2, 2)), InvalidChannelError);
  CHECK_THROWS(Channel({}, BipartiteDims(2, 2)));
  CHECK_THROWS(Channel({identity(4), identity(2)}));
}

TEST_CASE("standard channels") {
  const auto dep = depolarizing_channel(1.0);
  const auto rho = DensityOperator::from_pure(bell_state(BellState::PhiPlus));
  CHECK(max_abs(apply(dep, rho).matrix() - identity(4) / 4.0) < 1e-14);
  CHECK(is_unital(dep));
  CHECK(is_unital(one_sided_dephasing_channel(0.3)));
  CHECK_FALSE(is_unital(amplitude_damping_channel(0.3)));
  CHECK(effective_kraus_rank(one_sided_dephasing_channel(0.5)) == 2);
  CHECK(effective_kraus_rank(Channel::unitary(cnot())) == 1);
  // Dephasing at q = 1/2 sends Phi+ to (|00><00| + |11><11|)/2.
  const auto img = apply(one_sided_dephasing_channel(0.5), rho);
  CHECK(std::abs(img.matrix()(0, 3)) < 1e-15);
  CHECK(img.matrix()(0, 0).real() == doctest::Approx(0.5));
}

TEST_CASE("as_unitary recovers the unitary behind a redundant Kraus set") {
  Rng rng(10);
  const ComplexMatrix u = haar_unitary(4, rng);
  const Channel split({std::sqrt(0.3) * u, cplx(0.0, std::sqrt(0.7)) * u});
  const auto got = as_unitary(split);
  REQUIRE(got.has_value());
  CHECK(oracle::phase_distance(*got, u) < 1e-12);
  CHECK_FALSE(as_unitary(one_sided_dephasing_channel(0.2)).has_value());
}

TEST_CASE("pure-state preservation") {
  CHECK(is_pure_state_preserving(Channel::unitary(cnot())).preserving);
  const auto deph = is_pure_state_preserving(one_sided_dephasing_channel(0.5));
  CHECK_FALSE(deph.preserving);
  REQUIRE(deph.witness.has_value());
  CHECK(deph.witness_purity < 1.0 - kPurityTolerance);
  ComplexVector phi0 = ComplexVector::Zero(4);
  phi0(0) = 1.0;
  CHECK(is_pure_state_preserving(constant_channel(phi0, BipartiteDims(2, 2))).preserving);
}

TEST_CASE("unitary classification of the standard gates") {
  const BipartiteDims dims(2, 2);
  CHECK(classify_product_preserving_unitary(cnot(), dims).tag == UnitaryTag::NotProductPreserving);
  CHECK(classify_product_preserving_unitary(swap_operator(dims), dims).tag == UnitaryTag::LocalSwap);
  CHECK(classify_product_preserving_unitary(identity(4), dims).tag == UnitaryTag::Local);
  CHECK(max_abs(swap_operator(dims) - oracle::swap(2)) == 0.0);
  CHECK_THROWS_AS(classify_product_preserving_unitary(2.0 * identity(4), dims), NotUnitaryError);
}

TEST_CASE("Local and LocalSwap factors reproduce the unitary up to phase") {
  Rng rng(31);
  for (std::size_t d : {2u, 3u}) {
    const BipartiteDims dims(d, d);
    for (int rep = 0; rep < 20; ++rep) {
      const ComplexMatrix ua = haar_unitary(d, rng), ub = haar_unitary(d, rng);
      const ComplexMatrix local = std::polar(1.0, 0.1 * rep) * oracle::kron(ua, ub);
      const auto c1 = classify_product_preserving_unitary(local, dims);
      REQUIRE(c1.tag == UnitaryTag::Local);
      CHECK(oracle::phase_distance(oracle::kron(c1.factors->first, c1.factors->second), local) < 1e-8);

      const ComplexMatrix swapped = local * oracle::swap(d);
      const auto c2 = classify_product_preserving_unitary(swapped, dims);
      REQUIRE(c2.tag == UnitaryTag::LocalSwap);
      CHECK(oracle::phase_distance(oracle::kron(c2.factors->first, c2.factors->second) * oracle::swap(d), swapped) < 1e-8);

      CHECK(classify_product_preserving_unitary(haar_unitary(d * d, rng), dims).tag == UnitaryTag::NotProductPreserving);
    }
  }
}

TEST_CASE("unequal dims have no swap branch") {
  Rng rng(2);
  const BipartiteDims dims(2, 3);
  const ComplexMatrix local = oracle::kron(haar_unitary(2, rng), haar_unitary(3, rng));
  CHECK(classify_product_preserving_unitary(local, dims).tag == UnitaryTag::Local);
  CHECK(classify_product_preserving_unitary(haar_unitary(6, rng), dims).tag == UnitaryTag::NotProductPreserving);
}

TEST_CASE("reconstruction round trip and failure kinds") {
  Rng rng(17);
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    for (int rep = 0; rep < 10; ++rep) {
      const ComplexMatrix u = haar_unitary(n, rng);
      CHECK(oracle::phase_distance(reconstruct_unitary_from_channel(Channel::unitary(u)), u) <= 1e-8);
    }
  }
  try {
    reconstruct_unitary_from_channel(one_sided_dephasing_channel(0.5));
    FAIL("dephasing must be rejected");
  } catch (const ReconstructionError& e) {
    CHECK(e.kind() == ReconstructionFailure::NotPurePreserving);
    CHECK(e.witness().has_value());
  }
  ComplexVector phi0 = ComplexVector::Zero(4);
  phi0(0) = 1.0;
  try {
    reconstruct_unitary_from_channel(constant_channel(phi0, BipartiteDims(2, 2)));
    FAIL("constant channel must be rejected");
  } catch (const ReconstructionError& e) {
    CHECK(e.kind() == ReconstructionFailure::NotUnital);
  }
}

TEST_CASE("CNOT witness search returns Phi+ from |+0>") {
  const auto w = find_entangled_to_product_witness(cnot(), BipartiteDims(2, 2));
  REQUIRE(w.status == WitnessStatus::Found);
  CHECK(std::abs(std::abs(w.entangled->amplitudes().dot(bell_state(BellState::PhiPlus).amplitudes())) - 1.0) < 1e-12);
  CHECK(is_product(*w.product));
  CHECK(w.schmidt_gap == doctest::Approx(std::sqrt(0.5)));
  // psi_E maps onto psi_P
  CHECK((cnot() * w.entangled->amplitudes() - w.product->amplitudes()).norm() < 1e-12);
}

TEST_CASE("local and swap unitaries have no witness") {
  Rng rng(3);
  const BipartiteDims dims(3, 3);
  const ComplexMatrix local = oracle::kron(haar_unitary(3, rng), haar_unitary(3, rng));
  CHECK(find_entangled_to_product_witness(local, dims).status == WitnessStatus::NoWitnessExists);
  CHECK(find_entangled_to_product_witness(local * oracle::swap(3), dims).status == WitnessStatus::NoWitnessExists);
  const auto g = find_entangled_to_product_witness(haar_unitary(9, rng), dims);
  CHECK(g.status == WitnessStatus::Found);
  CHECK(g.schmidt_gap > kWitnessGap);
}

TEST_CASE("witness search is deterministic for a seed") {
  Rng rng(8);
  const ComplexMatrix u = haar_unitary(4, rng);
  const auto a = find_entangled_to_product_witness(u, BipartiteDims(2, 2), 500, 42);
  const auto b = find_entangled_to_product_witness(u, BipartiteDims(2, 2), 500, 42);
  CHECK(a.candidates_tried == b.candidates_tried);
  CHECK((a.product->amplitudes() - b.product->amplitudes()).norm() == 0.0);
}
