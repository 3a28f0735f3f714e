// Copyright 2026 The gtc Authors
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

#include "gtc/census.hpp"
#include "gtc/cycles.hpp"
#include "gtc/graph.hpp"
#include "gtc/verification.hpp"

namespace {

using namespace gtc;

void BM_EnumerateSerial(benchmark::State& state) {
  LabeledGraph g = build_tc(GtcParams(static_cast<int>(state.range(0)), 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_cycles_serial(g, 10));
  }
}
BENCHMARK(BM_EnumerateSerial)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  LabeledGraph g = build_tc(GtcParams(static_cast<int>(state.range(0)), 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_cycles(g, 10));
  }
}
BENCHMARK(BM_EnumerateParallel)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_Sweep(benchmark::State& state) {
  SweepOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(Family::TutteCoxeter, 40, Property::Vertex, opts));
  }
}
// jobs=0 uses every available core.
BENCHMARK(BM_Sweep)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
