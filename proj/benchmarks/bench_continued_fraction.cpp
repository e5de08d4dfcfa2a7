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

#include <random>

#include "plft/continued_fraction.hpp"
#include "plft/orphan_root.hpp"
#include "plft/plft.hpp"

namespace {

// A PLFT at depth `len` below (2z+1)/(z+2), with a fixed pseudo-random path.
plft::Plft deep_plft(std::size_t len) {
  std::mt19937_64 rng(len);
  plft::Word word(len);
  for (auto& m : word) m = (rng() & 1) ? plft::Move::R : plft::Move::L;
  return plft::apply_word(plft::Plft(2, 1, 1, 2), word);
}

void BM_Expand(benchmark::State& state) {
  const plft::Plft w = deep_plft(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plft::plft_cf_expand(w));
}
BENCHMARK(BM_Expand)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMicrosecond);

void BM_RootFromContinuedFractions(benchmark::State& state) {
  const plft::Plft w = deep_plft(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plft::orphan_root_cf(w));
}
BENCHMARK(BM_RootFromContinuedFractions)
    ->RangeMultiplier(4)
    ->Range(16, 4096)
    ->Unit(benchmark::kMicrosecond);

void BM_RootByIteration(benchmark::State& state) {
  const plft::Plft w = deep_plft(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(plft::root_by_iteration(w));
}
BENCHMARK(BM_RootByIteration)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMicrosecond);

// Long runs of one letter are where the two routes part ways.
void BM_RootLongRuns(benchmark::State& state) {
  const auto run = static_cast<std::size_t>(state.range(0));
  plft::Word word;
  for (int block = 0; block < 4; ++block) word.insert(word.end(), run, block % 2 ? plft::Move::L : plft::Move::R);
  const plft::Plft w = plft::apply_word(plft::Plft(2, 1, 1, 2), word);
  const bool by_cf = state.range(1) != 0;
  for (auto _ : state) {
    if (by_cf) {
      benchmark::DoNotOptimize(plft::orphan_root_cf(w));
    } else {
      benchmark::DoNotOptimize(plft::root_by_iteration(w));
    }
  }
}
BENCHMARK(BM_RootLongRuns)
    ->ArgsProduct({{100, 1000, 10000}, {0, 1}})
    ->ArgNames({"run", "cf"})
    ->Unit(benchmark::kMicrosecond);

void BM_Decompose(benchmark::State& state) {
  std::mt19937_64 rng(7);
  plft::Word word(static_cast<std::size_t>(state.range(0)));
  for (auto& m : word) m = (rng() & 1) ? plft::Move::R : plft::Move::L;
  const plft::Plft w = plft::apply_word(plft::Plft::identity(), word);
  for (auto _ : state) benchmark::DoNotOptimize(plft::decompose_special(w));
}
BENCHMARK(BM_Decompose)->Arg(20)->Arg(200)->Arg(2000)->Unit(benchmark::kMicrosecond);

}  // namespace
