// Copyright 2026 The gge Authors
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


#include <thread>
#include <vector>

#include <benchmark/benchmark.h>

#include "gge/ising.hpp"

namespace {

void BM_GFn(benchmark::State &state) {
    const double lambda = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(gge::ising::g_fn(lambda, 7));
}
BENCHMARK(BM_GFn)->Arg(50)->Arg(99)->Arg(100)->Arg(150);

void BM_IsingPoint(benchmark::State &state) {
    const auto max_gap = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gge::ising::ising_point(1.5, max_gap));
}
BENCHMARK(BM_IsingPoint)->Arg(1)->Arg(15)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State &state) {
    gge::ising::IsingParams params;
    for (int i = 0; i <= 200; ++i) params.lambda_grid.push_back(i / 100.0);
    params.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gge::ising::sweep(params));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
