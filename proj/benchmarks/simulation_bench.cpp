// Copyright 2026 The Emograph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "emograph/batch.hpp"
#include "emograph/generators.hpp"
#include "emograph/propagation.hpp"

namespace {

void BM_RunSimulation(benchmark::State& state) {
  using namespace emograph;
  Graph graph = generate_er_graph(static_cast<int>(state.range(0)), 0.5, 42);
  init_node_attributes(graph, EmotionDistribution{}, 7);
  StrategyParams params;
  params.strategy = Strategy::Random;

  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_simulation(graph, params, "0", kDefaultMaxRounds, seed++));
  }
}
BENCHMARK(BM_RunSimulation)->Arg(10)->Arg(50)->Arg(200);

void BM_BatchExperiment(benchmark::State& state) {
  using namespace emograph;
  BatchConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        batch_experiment(config, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BatchExperiment)->Arg(10)->Arg(50);

}  // namespace
