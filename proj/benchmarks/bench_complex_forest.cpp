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

#include "plft/complex_forest.hpp"

namespace {

void BM_AncestorChain(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> pick(1, state.range(0));
  std::vector<plft::GaussianRational> inputs;
  for (int i = 0; i < 256; ++i) {
    inputs.push_back({plft::Rational(pick(rng), pick(rng)), plft::Rational(pick(rng), pick(rng))});
    inputs.back().re.canonicalize();
    inputs.back().im.canonicalize();
  }
  const plft::OrphanParams params(1, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plft::ancestor_chain(inputs[i++ % inputs.size()], params));
  }
}
BENCHMARK(BM_AncestorChain)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

}  // namespace
