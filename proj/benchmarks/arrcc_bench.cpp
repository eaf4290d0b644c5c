// Copyright 2026 The arrcc Authors
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

#include "arrcc/conversions.hpp"
#include "arrcc/kremer.hpp"
#include "arrcc/numkernel.hpp"
#include "arrcc/random.hpp"
#include "arrcc/search.hpp"

namespace {

using namespace arrcc;

void BM_HermitianEigen(benchmark::State &state) {
    Rng rng(1);
    const ComplexMatrix h = rng.hermitian(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(h));
}
BENCHMARK(BM_HermitianEigen)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

TwoWayQuantumProtocol random_protocol(std::size_t rounds, std::size_t dim) {
    Rng rng(7);
    TwoWayQuantumProtocol p;
    p.x_size = p.y_size = 2;
    p.alice_dim = p.bob_dim = dim;
    for (std::size_t t = 0; t < rounds; ++t) {
        TwoWayRound r{t % 2 == 0 ? Party::kAlice : Party::kBob, {}};
        for (int i = 0; i < 2; ++i) r.unitaries.push_back(rng.unitary(2 * dim));
        p.rounds.push_back(std::move(r));
    }
    return p;
}

void BM_SimulateTwoWay(benchmark::State &state) {
    const TwoWayQuantumProtocol p = random_protocol(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_two_way(p, 1, 0));
}
BENCHMARK(BM_SimulateTwoWay)->Arg(2)->Arg(4)->Arg(8);

void BM_Decompose(benchmark::State &state) {
    const TwoWayQuantumProtocol p = random_protocol(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(p, 0, 1));
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(4)->Arg(6);

void BM_MaxMargin(benchmark::State &state) {
    const PartialBoolFn f = parse_family_expression("EQ(2)");
    SearchConfig cfg;
    cfg.dim = static_cast<std::size_t>(state.range(0));
    cfg.restarts = 4;
    for (auto _ : state) benchmark::DoNotOptimize(max_margin(f, cfg));
}
BENCHMARK(BM_MaxMargin)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_QuantumOneWayCompile(benchmark::State &state) {
    const PartialBoolFn f = parse_family_expression("EQ(2)");
    const DimBound b = min_dim_upper(f, 4, SearchConfig{});
    for (auto _ : state) benchmark::DoNotOptimize(arr_to_quantum_oneway(b.certificate, f));
}
BENCHMARK(BM_QuantumOneWayCompile);

}  // namespace

BENCHMARK_MAIN();
