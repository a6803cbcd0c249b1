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


#include <complex>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gge/rdm.hpp"

namespace {

gge::PureState random_state(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<gge::Amplitude> amps(std::size_t{1} << n);
    for (auto &a : amps) a = {normal(rng), normal(rng)};
    return gge::PureState::normalized(n, 2, std::move(amps));
}

void BM_ReducePair(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const gge::PureState s = random_state(n, 7);
    const gge::SiteSubset keep({1, n / 2});
    for (auto _ : state) benchmark::DoNotOptimize(gge::purity(gge::reduce(s, keep)));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * s.dimension() * sizeof(gge::Amplitude)));
}
BENCHMARK(BM_ReducePair)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ReduceHalfChain(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const gge::PureState s = random_state(n, 11);
    std::vector<std::size_t> sites;
    for (std::size_t i = 1; i <= n / 2; ++i) sites.push_back(i);
    const gge::SiteSubset keep(sites);
    for (auto _ : state) benchmark::DoNotOptimize(gge::subset_linear_entropy(s, keep));
}
BENCHMARK(BM_ReduceHalfChain)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
