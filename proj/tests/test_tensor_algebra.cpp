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

#include <clocale>
#include <locale>

#include "ftd/random.hpp"
#include "ftd/tensor_algebra.hpp"
#include "oracles.hpp"

using namespace ftd;

TEST_CASE("kron places blocks by the left factor") {
  const ComplexMatrix x = pauli(1);
  const ComplexMatrix z = pauli(3);
  const ComplexMatrix k = kron(x, z);
  CHECK(k.rows() == 4);
  CHECK(max_abs(k - oracle::kron(x, z)) == 0.0);
  CHECK(k(0, 2) == cplx(1.0, 0.0));
  CHECK(k(1, 3) == cplx(-1.0, 0.0));
}

TEST_CASE("partial trace of a product") {
  Rng rng(7);
  for (auto [da, db] : {std::pair{2u, 3u}, {3u, 2u}, {3u, 3u}}) {
    const BipartiteDims dims(da, db);
    const ComplexMatrix a = random_density_matrix(da, da, rng);
    const ComplexMatrix b = random_density_matrix(db, db, rng);
    const ComplexMatrix ab = kron(a, b);
    CHECK(max_abs(partial_trace(ab, dims, Subsystem::B) - a) < 1e-14);
    CHECK(max_abs(partial_trace(ab, dims, Subsystem::A) - b) < 1e-14);
  }
}

TEST_CASE("partial transpose matches the entrywise definition and is an involution") {
  Rng rng(11);
  for (auto [da, db] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}}) {
    const BipartiteDims dims(da, db);
    const ComplexMatrix m = ginibre(da * db, da * db, rng);
    const ComplexMatrix pt = partial_transpose(m, dims);
    CHECK(max_abs(pt - oracle::partial_transpose_b(m, da, db)) == 0.0);
    CHECK(max_abs(partial_transpose(pt, dims) - m) == 0.0);
  }
}

TEST_CASE("dims below 2 are rejected") {
  CHECK_THROWS_AS(BipartiteDims(1, 2), DimensionError);
  CHECK_THROWS_AS(partial_trace(identity(4), BipartiteDims(2, 3), Subsystem::A), DimensionError);
}

TEST_CASE("Jacobi eigensolver agrees with Eigen on random Hermitian matrices") {
  Rng rng(3);
  for (std::size_t n : {2u, 3u, 4u, 6u, 9u, 16u, 36u}) {
    for (int rep = 0; rep < 5; ++rep) {
      const ComplexMatrix h = random_hermitian(n, rng, 3.0);
      const auto eig = hermitian_eigen(h);
      const Eigen::VectorXd ref = oracle::eigenvalues(h);
      CHECK((eig.values - ref).cwiseAbs().maxCoeff() < 1e-12);
      // A V = V diag(lambda), V unitary
      CHECK(max_abs(h * eig.vectors - eig.vectors * eig.values.cast<cplx>().asDiagonal()) < 1e-11);
      CHECK(is_unitary(eig.vectors, 1e-11));
    }
  }
}

TEST_CASE("Jacobi handles degenerate and diagonal input") {
  const ComplexMatrix id = identity(5);
  const auto eig = hermitian_eigen(id);
  for (Eigen::Index i = 0; i < 5; ++i) CHECK(eig.values(i) == doctest::Approx(1.0));
  const auto spec = hermitian_spectrum(kron(pauli(3), pauli(3)));
  CHECK(spec.front() == doctest::Approx(-1.0));
  CHECK(spec.back() == doctest::Approx(1.0));
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix m = identity(2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigen(m), NotHermitianError);
}

TEST_CASE("unitary_evolution matches the Pauli closed form") {
  for (double t : {0.0, 0.3, 1.7}) {
    const ComplexMatrix u = unitary_evolution(pauli(1), t);
    const ComplexMatrix ref = std::cos(t) * identity(2) - cplx(0.0, 1.0) * std::sin(t) * pauli(1);
    CHECK(max_abs(u - ref) < 1e-13);
  }
}

TEST_CASE("phase_aligned_distance ignores a global phase") {
  Rng rng(5);
  const ComplexMatrix u = haar_unitary(4, rng);
  CHECK(phase_aligned_distance(u, std::polar(1.0, 0.77) * u) < 1e-12);
  CHECK(phase_aligned_distance(u, haar_unitary(4, rng)) > 0.1);
}

TEST_CASE("matrix text round trip") {
  Rng rng(9);
  const ComplexMatrix m = ginibre(3, 4, rng);
  const ComplexMatrix back = parse_matrix_text(format_matrix_text(m));
  CHECK(max_abs(back - m) == 0.0);
}

TEST_CASE("matrix text accepts the documented entry forms") {
  const ComplexMatrix m = parse_matrix_text("2 2\n0.5-0.5j 1\n-2j 1e-3+4j\n");
  CHECK(m(0, 0) == cplx(0.5, -0.5));
  CHECK(m(0, 1) == cplx(1.0, 0.0));
  CHECK(m(1, 0) == cplx(0.0, -2.0));
  CHECK(m(1, 1) == cplx(1e-3, 4.0));
  CHECK_THROWS(parse_matrix_text("2 2\n1 2\n"));
  CHECK_THROWS(parse_matrix_text("1 1\n1,5\n"));
  CHECK_THROWS(parse_matrix_text("1 1\nnan\n"));
}

TEST_CASE("matrix text ignores the global locale") {
  const std::locale saved;
  try {
    std::locale::global(std::locale("de_DE.UTF-8"));
  } catch (const std::runtime_error&) {
    std::setlocale(LC_NUMERIC, "C");  // locale not installed; the parse still must not depend on it
  }
  const ComplexMatrix m = parse_matrix_text("1 1\n0.25+1.5j\n");
  CHECK(m(0, 0) == cplx(0.25, 1.5));
  CHECK(format_complex(cplx(0.5, -0.25)).find(',') == std::string::npos);
  std::locale::global(saved);
}
