// Copyright 2026 The plft Authors
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

#include <benchmark/benchmark.h>

#include "plft/census.hpp"

namespace {

void BM_SummatoryH(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plft::summatory_h(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SummatoryH)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMillisecond);

void BM_SummatoryHThreads(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plft::summatory_h(100000, threads));
}
BENCHMARK(BM_SummatoryHThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_HClosed(benchmark::State& state) {
  const auto D = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(plft::h_closed(D));
}
BENCHMARK(BM_HClosed)->Arg(200)->Arg(2000)->Arg(20000);

void BM_HDirect(benchmark::State& state) {
  const auto D = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(plft::h_direct(D));
}
BENCHMARK(BM_HDirect)->Arg(50)->Arg(200)->Arg(800)->Unit(benchmark::kMicrosecond);

void BM_EnumerateOrphans(benchmark::State& state) {
  const auto D = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(plft::enumerate_orphans(D));
}
BENCHMARK(BM_EnumerateOrphans)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_Nu2Tables(benchmark::State& state) {
  const auto D = static_cast<std::uint64_t>(state.range(0));
  const plft::DivisorTables tables(D);
  for (auto _ : state) benchmark::DoNotOptimize(plft::nu2(D, tables));
}
BENCHMARK(BM_Nu2Tables)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_AuxSum(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plft::aux_sum(x));
}
BENCHMARK(BM_AuxSum)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
