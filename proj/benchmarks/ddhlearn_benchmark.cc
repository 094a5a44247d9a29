// Copyright 2026 The ddhlearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "benchmark/benchmark.h"

#include "ddhlearn/bool_dist.h"
#include "ddhlearn/generator.h"
#include "ddhlearn/learner.h"
#include "ddhlearn/numtheory.h"
#include "ddhlearn/prf.h"

namespace ddhlearn {
namespace {

void BM_GenerateInstance(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  uint64_t i = 0;
  for (auto _ : state) {
    Rng rng(DeriveSeed(1, "bench-instance", i++));
    benchmark::DoNotOptimize(GenerateInstance(n, rng));
  }
}
BENCHMARK(BM_GenerateInstance)->Arg(16)->Arg(64)->Arg(128);

void BM_PrfEval(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  Rng rng(2);
  const GroupInstance inst = GenerateInstance(n, rng);
  const PrfKey key = PrfKey::Random(inst, rng);
  const BitString x = BitString::Random(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(PrfEval(inst, key, x));
}
BENCHMARK(BM_PrfEval)->Arg(16)->Arg(64)->Arg(256);

void BM_LearnKey(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const DlogEngine engine = state.range(1) == 0 ? DlogEngine::kBrute : DlogEngine::kBsgs;
  Rng rng(3);
  const GroupInstance inst = GenerateInstance(n, rng);
  const PrfKey key = PrfKey::Random(inst, rng);
  const BitString x = BitString::Random(n, rng);
  const ZqElement fx = PrfEval(inst, key, x);
  for (auto _ : state) benchmark::DoNotOptimize(LearnKey(inst, x, fx, LearnerOptions{engine}));
  state.SetLabel(DlogEngineName(engine));
}
BENCHMARK(BM_LearnKey)->ArgsProduct({{8, 12, 16}, {0, 1}})->ArgsProduct({{24, 32}, {1}});

void BM_TabulateKgen(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  Rng rng(4);
  const GroupInstance inst = GenerateInstance(n, rng);
  const GeneratorSpec gen = MakeKgenSpec(inst, PrfKey::Random(inst, rng));
  for (auto _ : state) benchmark::DoNotOptimize(TabulateExact(gen));
}
BENCHMARK(BM_TabulateKgen)->Arg(6)->Arg(10);

void BM_ClassifyExactGenerators(benchmark::State& state) {
  const BoolFn c = BoolFn::FromIndex(2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(ClassifyExactGenerators(c, 2));
}
BENCHMARK(BM_ClassifyExactGenerators);

}  // namespace
}  // namespace ddhlearn

BENCHMARK_MAIN();
