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


#include <benchmark/benchmark.h>

#include "gge/measure.hpp"

namespace {

void BM_EgGhz(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const gge::PureState s = gge::make_named_state(gge::StateFamily::Ghz, n);
    for (auto _ : state) benchmark::DoNotOptimize(gge::e_g(s, 2));
}
BENCHMARK(BM_EgGhz)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_EgThreads(benchmark::State &state) {
    const gge::PureState s = gge::make_named_state(gge::StateFamily::W, 14);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gge::e_g(s, 3, threads));
}
BENCHMARK(BM_EgThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FourQubitTable(benchmark::State &state) {
    const gge::PureState s = gge::make_named_state(gge::StateFamily::Chi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gge::e_g(s, 1));
        benchmark::DoNotOptimize(gge::e_g(s, 2));
    }
}
BENCHMARK(BM_FourQubitTable);

}  // namespace
