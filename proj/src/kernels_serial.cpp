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

#include "ftd/kernels.hpp"

#include <stdexcept>

#include "kernel_items.hpp"

namespace ftd::kernels {

std::size_t first_argmax(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("first_argmax: empty input");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return best;
}

namespace serial {

std::vector<StateSample> evaluate_states(std::span<const ComplexMatrix> states, const BipartiteDims& dims) {
  std::vector<StateSample> out(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) out[i] = detail::sample_state(states[i], dims);
  return out;
}

std::vector<ComplexMatrix> apply_channel_batch(const Channel& ch, std::span<const ComplexMatrix> inputs) {
  std::vector<ComplexMatrix> out(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = ch.apply(inputs[i]);
  return out;
}

std::vector<double> image_schmidt_gaps(const ComplexMatrix& map, std::span<const ComplexVector> inputs,
                                       const BipartiteDims& dims) {
  std::vector<double> out(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = detail::image_gap(map, inputs[i], dims);
  return out;
}

std::vector<ComplexMatrix> propagate_batch(const LindbladGenerator& gen, std::span<const ComplexMatrix> initial,
                                           double duration, double dt) {
  std::vector<ComplexMatrix> out(initial.size());
  for (std::size_t i = 0; i < initial.size(); ++i) out[i] = propagate(gen, initial[i], duration, dt);
  return out;
}

}  // namespace serial
}  // namespace ftd::kernels
