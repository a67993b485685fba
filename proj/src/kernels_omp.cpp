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

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ftd/kernels.hpp"
#include "kernel_items.hpp"

namespace ftd::kernels {

namespace {

// Runs body(i) for i in [0, n) across threads. Exceptions cannot cross an
// OpenMP region boundary, so the one with the lowest index is rethrown after
// the loop.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

std::vector<StateSample> evaluate_states(std::span<const ComplexMatrix> states, const BipartiteDims& dims) {
  std::vector<StateSample> out(states.size());
  parallel_for(states.size(), [&](std::size_t i) { out[i] = detail::sample_state(states[i], dims); });
  return out;
}

std::vector<ComplexMatrix> apply_channel_batch(const Channel& ch, std::span<const ComplexMatrix> inputs) {
  std::vector<ComplexMatrix> out(inputs.size());
  parallel_for(inputs.size(), [&](std::size_t i) { out[i] = ch.apply(inputs[i]); });
  return out;
}

std::vector<double> image_schmidt_gaps(const ComplexMatrix& map, std::span<const ComplexVector> inputs,
                                       const BipartiteDims& dims) {
  std::vector<double> out(inputs.size());
  parallel_for(inputs.size(), [&](std::size_t i) { out[i] = detail::image_gap(map, inputs[i], dims); });
  return out;
}

std::vector<ComplexMatrix> propagate_batch(const LindbladGenerator& gen, std::span<const ComplexMatrix> initial,
                                           double duration, double dt) {
  std::vector<ComplexMatrix> out(initial.size());
  parallel_for(initial.size(), [&](std::size_t i) { out[i] = propagate(gen, initial[i], duration, dt); });
  return out;
}

}  // namespace parallel
}  // namespace ftd::kernels
