// Copyright 2026 The w52 Authors
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


#include "w52/contextuality.hpp"
#include "w52/geometry.hpp"
#include "w52/pentads.hpp"
#include "w52/taxonomy.hpp"

namespace {

using namespace w52;

void BM_multiply_all_pairs(benchmark::State &state) {
    auto obs = all_observables();
    for (auto _ : state) {
        int phase = 0;
        for (const auto &a : obs) {
            for (const auto &b : obs) {
                phase += multiply(a, b).phase.value();
            }
        }
        benchmark::DoNotOptimize(phase);
    }
    state.SetItemsProcessed(state.iterations() * 63 * 63);
}
BENCHMARK(BM_multiply_all_pairs);

void BM_build_space(benchmark::State &state) {
    for (auto _ : state) {
        Space space;
        benchmark::DoNotOptimize(space.planes().data());
    }
}
BENCHMARK(BM_build_space)->Unit(benchmark::kMicrosecond);

void BM_enumerate_pentads(benchmark::State &state) {
    const Space &space = Space::get();
    unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto pentads = enumerate_pentads(space, threads);
        benchmark::DoNotOptimize(pentads.data());
    }
    state.SetItemsProcessed(state.iterations() * kNumPentads);
}
BENCHMARK(BM_enumerate_pentads)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_census_signatures(benchmark::State &state) {
    const Space &space = Space::get();
    auto pentads = enumerate_pentads(space);
    unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto sigs = census_signatures(space, pentads, threads);
        benchmark::DoNotOptimize(sigs.data());
    }
    state.SetItemsProcessed(state.iterations() * kNumPentads);
}
BENCHMARK(BM_census_signatures)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_analyze_configurations(benchmark::State &state) {
    const Space &space = Space::get();
    auto pentads = enumerate_pentads(space);
    std::vector<ContextSet> sets;
    for (size_t k = 0; k < pentads.size(); k += 64) {
        sets.push_back(context_set(space, pentad_to_config(space, pentads[k])));
    }
    for (auto _ : state) {
        int valid = 0;
        for (const auto &cs : sets) {
            valid += analyze(cs).verdict == Verdict::ValidParityProof;
        }
        benchmark::DoNotOptimize(valid);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sets.size()));
}
BENCHMARK(BM_analyze_configurations)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
