// Copyright 2026 The qreuse Authors
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


// Parallel kernels against their serial references on QAOA instances.

#include <benchmark/benchmark.h>

#include "qreuse/cones.hpp"
#include "qreuse/generators.hpp"
#include "qreuse/greedy.hpp"
#include "qreuse/parallel.hpp"

namespace {

using namespace qreuse;

Circuit instance(int64_t n) {
    return generate({.family = Family::Qaoa, .N = static_cast<uint32_t>(n), .p = 1, .seed = 7});
}

void BM_ConesParallel(benchmark::State &state) {
    Circuit c = instance(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_cones(c));
    }
}

void BM_ConesSerial(benchmark::State &state) {
    Circuit c = instance(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_cones_serial(c));
    }
}

void BM_BruteFirstParallel(benchmark::State &state) {
    ConeMap cones = compute_cones(instance(state.range(0)), {.with_gates = false});
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_brute_first(cones));
    }
}

void BM_BruteFirstSerial(benchmark::State &state) {
    ConeMap cones = compute_cones(instance(state.range(0)), {.with_gates = false});
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_brute_first_serial(cones));
    }
}

BENCHMARK(BM_ConesParallel)->Arg(80)->Arg(400)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConesSerial)->Arg(80)->Arg(400)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteFirstParallel)->Arg(80)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteFirstSerial)->Arg(80)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char **argv) {
    configure_threads_from_env();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
