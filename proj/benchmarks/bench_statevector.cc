// Copyright 2026 The graphent Authors
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

#include <numbers>

#include "graphent/graphent.h"

namespace {

using namespace graphent;

const PrepParams kParams(std::numbers::pi / 2, 0.3, 1.1);

void BM_PrepareChain(benchmark::State& state) {
    const Graph g = generate_named(GraphKind::Chain, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(prepare_graph_state(g, kParams));
}
BENCHMARK(BM_PrepareChain)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

void BM_PrepareComplete(benchmark::State& state) {
    const Graph g = generate_named(GraphKind::Complete, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(prepare_graph_state(g, kParams));
}
BENCHMARK(BM_PrepareComplete)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

void BM_ExactEntanglement(benchmark::State& state) {
    const StateVector s =
        prepare_graph_state(generate_named(GraphKind::Chain, static_cast<std::size_t>(state.range(0))), kParams);
    for (auto _ : state) benchmark::DoNotOptimize(s.exact_entanglement(1));
}
BENCHMARK(BM_ExactEntanglement)->DenseRange(10, 20, 5);

void BM_AnalyticEntanglement(benchmark::State& state) {
    const auto degree = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(analytic_record(degree, kParams));
}
BENCHMARK(BM_AnalyticEntanglement)->Arg(1)->Arg(4)->Arg(32);

void BM_SampleShots(benchmark::State& state) {
    const auto shots = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sample_bernoulli(0.3, shots, ++seed, 1e-2));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleShots)->Arg(8192)->Arg(1 << 20);

void BM_EstimateEntanglement(benchmark::State& state) {
    const StateVector s = prepare_graph_state(generate_named(GraphKind::Complete, 5), kParams);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(estimate_entanglement(s, 0, kDefaultShots, ++seed));
}
BENCHMARK(BM_EstimateEntanglement);

}  // namespace

BENCHMARK_MAIN();
