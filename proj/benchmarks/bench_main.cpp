// Copyright 2026 The sepdraw Authors.
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

#include <random>

#include <benchmark/benchmark.h>

#include "sepdraw/extension.hpp"
#include "sepdraw/separability.hpp"
#include "sepdraw/small_tables.hpp"
#include "sepdraw/two_page.hpp"

namespace {

using namespace sepdraw;

void BM_IsSeparableConvex(benchmark::State& state) {
  const RealizabilityTables& tables = default_tables();
  RotationSystem rs = convex_rotation_system(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_separable(tables, rs));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsSeparableConvex)
    ->DenseRange(10, 30, 5)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_IsSeparableTwoPage(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  RotationSystem rs = two_page_rotation_system(random_two_page_complete(n, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_separable(default_tables(), rs));
  }
}
BENCHMARK(BM_IsSeparableTwoPage)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_good_drawings(n));
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_BuildTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_tables());
}
BENCHMARK(BM_BuildTables)->Unit(benchmark::kMillisecond);

void BM_ExtendSeparable(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const int n = static_cast<int>(state.range(0));
  CombinatorialMap m = from_two_page(random_two_page_partial(n, n, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extend_to_complete_separable(m));
  }
}
BENCHMARK(BM_ExtendSeparable)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
