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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ftd/kernels.hpp"
#include "ftd/random.hpp"

namespace {

using namespace ftd;

std::vector<ComplexMatrix> random_states(std::size_t count, std::size_t n) {
  Rng rng(1);
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_density_matrix(n, n, rng));
  return out;
}

template <auto Kernel>
void BM_evaluate_states(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const BipartiteDims dims(d, d);
  const auto states = random_states(256, d * d);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(states, dims));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(states.size()));
}

template <auto Kernel>
void BM_image_schmidt_gaps(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const ComplexMatrix u = haar_unitary(d * d, rng);
  std::vector<ComplexVector> inputs;
  for (int i = 0; i < 2000; ++i) inputs.push_back(kron(haar_vector(d, rng), haar_vector(d, rng)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(u, inputs, BipartiteDims(d, d)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(inputs.size()));
}

template <auto Kernel>
void BM_propagate_batch(benchmark::State& state) {
  const auto gen = depolarizing_generator(1.0);
  Rng rng(3);
  std::vector<ComplexMatrix> inputs;
  for (int i = 0; i < 16; ++i) inputs.push_back(ginibre(4, 4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(gen, inputs, 0.5, 1e-3));
}

template <auto Kernel>
void BM_apply_channel_batch(benchmark::State& state) {
  const auto ch = depolarizing_channel(0.5);
  const auto states = random_states(1024, 4);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(ch, states));
}

}  // namespace

BENCHMARK(BM_evaluate_states<kernels::serial::evaluate_states>)->Name("evaluate_states/serial")->Arg(2)->Arg(3);
BENCHMARK(BM_evaluate_states<kernels::parallel::evaluate_states>)->Name("evaluate_states/parallel")->Arg(2)->Arg(3);
BENCHMARK(BM_image_schmidt_gaps<kernels::serial::image_schmidt_gaps>)->Name("image_schmidt_gaps/serial")->Arg(2)->Arg(3);
BENCHMARK(BM_image_schmidt_gaps<kernels::parallel::image_schmidt_gaps>)->Name("image_schmidt_gaps/parallel")->Arg(2)->Arg(3);
BENCHMARK(BM_propagate_batch<kernels::serial::propagate_batch>)->Name("propagate_batch/serial");
BENCHMARK(BM_propagate_batch<kernels::parallel::propagate_batch>)->Name("propagate_batch/parallel");
BENCHMARK(BM_apply_channel_batch<kernels::serial::apply_channel_batch>)->Name("apply_channel_batch/serial");
BENCHMARK(BM_apply_channel_batch<kernels::parallel::apply_channel_batch>)->Name("apply_channel_batch/parallel");

BENCHMARK_MAIN();
