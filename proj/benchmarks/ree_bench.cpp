// Copyright 2026 The Ree Workbench Authors
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

#include <memory>

#include "ree/conic.hpp"
#include "ree/design.hpp"
#include "ree/embed.hpp"
#include "ree/field.hpp"
#include "ree/pentagons.hpp"
#include "ree/symbolic.hpp"

namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto f = ree::Field::standard(static_cast<std::uint32_t>(state.range(0)));
  const auto q = f.order();
  ree::Field::Code acc = 1;
  for (auto _ : state) {
    for (ree::Field::Code a = 1; a < q; ++a) acc = f.mul(acc, a) ^ (acc == 0);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (q - 1));
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(64)->Arg(729);

void BM_HyperovalContext(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ree::build_context());
}
BENCHMARK(BM_HyperovalContext)->Unit(benchmark::kMillisecond);

void BM_AutomorphismGroup(benchmark::State& state) {
  const auto d = ree::build_ree_unital(ree::build_context());
  for (auto _ : state) benchmark::DoNotOptimize(ree::automorphism_group(d).order());
}
BENCHMARK(BM_AutomorphismGroup)->Unit(benchmark::kMillisecond);

void BM_ClassifyPentagons(benchmark::State& state) {
  const auto ctx = ree::build_context();
  const auto g = ree::hyperoval_stabilizer(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(ree::classify_pentagons(ctx, g).size());
}
BENCHMARK(BM_ClassifyPentagons)->Unit(benchmark::kMillisecond);

void BM_DeterminantIdentities(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ree::verify_thm1_identities().size());
}
BENCHMARK(BM_DeterminantIdentities)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  const auto d = ree::build_ree_unital(ree::build_context());
  const auto plane = std::make_shared<const ree::Plane>(ree::Field::standard(static_cast<std::uint32_t>(state.range(0))));
  ree::SearchConfig cfg;
  cfg.level = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ree::search(d, plane, cfg).nodes);
}
BENCHMARK(BM_Search)->Args({8, 2})->Args({9, 2})->Args({16, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
