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
#include <random>

#include "ftd/tensor_algebra.hpp"

namespace ftd {

using Rng = std::mt19937_64;

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unit vector in C^n.
ComplexVector haar_vector(std::size_t n, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with the phase fix).
ComplexMatrix haar_unitary(std::size_t n, Rng& rng);

/// GUE-like Hermitian matrix scaled to unit Frobenius norm times `scale`.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng, double scale = 1.0);

/// Random density matrix of the given rank (induced measure).
ComplexMatrix random_density_matrix(std::size_t n, std::size_t rank, Rng& rng);

}  // namespace ftd
