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

// Data-parallel inner loops. Each kernel exists twice: `serial` is the
// reference kept for testing, `parallel` distributes independent items over
// OpenMP threads. Both produce identical results item by item; reductions
// break ties by lowest index so the output never depends on scheduling.

#include <span>
#include <vector>

#include "ftd/channels.hpp"
#include "ftd/lindblad.hpp"

namespace ftd::kernels {

struct StateSample {
  double trace = 0.0;
  double purity = 0.0;
  double lambda_minus = 0.0;
  double negativity = 0.0;
};

/// Index of the first maximum; throws on empty input.
std::size_t first_argmax(std::span<const double> values);

namespace serial {

std::vector<StateSample> evaluate_states(std::span<const ComplexMatrix> states, const BipartiteDims& dims);

std::vector<ComplexMatrix> apply_channel_batch(const Channel& ch, std::span<const ComplexMatrix> inputs);

/// Second Schmidt coefficient of map * v for every v.
std::vector<double> image_schmidt_gaps(const ComplexMatrix& map, std::span<const ComplexVector> inputs,
                                       const BipartiteDims& dims);

/// propagate() applied to every initial operator.
std::vector<ComplexMatrix> propagate_batch(const LindbladGenerator& gen, std::span<const ComplexMatrix> initial,
                                           double duration, double dt);

}  // namespace serial

namespace parallel {

std::vector<StateSample> evaluate_states(std::span<const ComplexMatrix> states, const BipartiteDims& dims);

std::vector<ComplexMatrix> apply_channel_batch(const Channel& ch, std::span<const ComplexMatrix> inputs);

std::vector<double> image_schmidt_gaps(const ComplexMatrix& map, std::span<const ComplexVector> inputs,
                                       const BipartiteDims& dims);

std::vector<ComplexMatrix> propagate_batch(const LindbladGenerator& gen, std::span<const ComplexMatrix> initial,
                                           double duration, double dt);

}  // namespace parallel

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int thread_count();

}  // namespace ftd::kernels
