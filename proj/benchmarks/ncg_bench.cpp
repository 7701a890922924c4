// Copyright 2026 The ncglab Authors
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

#include <cstdint>

#include <benchmark/benchmark.h>

#include "ncg/asets.hpp"
#include "ncg/equilibrium.hpp"
#include "ncg/families.hpp"
#include "ncg/search.hpp"
#include "ncg/structure.hpp"
#include "ncg/verifiers.hpp"

namespace {

using namespace ncg;

void BM_EnumerateNash(benchmark::State& state) {
  EnumerationConfig ec;
  ec.n = static_cast<int>(state.range(0));
  ec.alpha = Rational(3);
  ec.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto cat = enumerate_nash(ec);
    benchmark::DoNotOptimize(cat.entries.size());
  }
}
BENCHMARK(BM_EnumerateNash)
    ->Args({4, 1})
    ->Args({5, 1})
    ->Args({5, 4})
    ->Unit(benchmark::kMillisecond);

void BM_BestResponse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameConfig cfg{n, Rational(2)};
  auto s = random_strategy(n, Rational(1, 3), Rational(1, 2), 7);
  for (auto _ : state) {
    auto br = best_response_exact(cfg, s, 0);
    benchmark::DoNotOptimize(br.cost);
  }
}
BENCHMARK(BM_BestResponse)->DenseRange(8, 14, 3)->Unit(benchmark::kMillisecond);

void BM_IsNashCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameConfig cfg{n, Rational(n)};
  auto s = cycle_strategy(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_nash(cfg, s).is_ne);
}
BENCHMARK(BM_IsNashCycle)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

// Biconnected random graph for the forest benchmark; falls back to a cycle.
StrategyVector biconnected(int n) {
  for (std::uint64_t seed = 1; seed < 5000; ++seed) {
    auto s = random_strategy(n, Rational(1, 4), Rational(1, 2), seed);
    auto g = build_graph({n, Rational(1)}, s);
    auto hs = nontrivial_components(g);
    if (hs.size() == 1 && static_cast<int>(hs[0].vertices.size()) == n) return s;
  }
  return cycle_strategy(n);
}

void BM_DominanceForest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = build_graph({n, Rational(1)}, biconnected(n));
  auto h = nontrivial_components(g).at(0);
  auto cov = make_covering(g, h, 0, CoveringPolicy::kAll);
  for (auto _ : state) {
    auto f = dominance_forest(g, h, cov);
    benchmark::DoNotOptimize(f.parent.size());
  }
}
BENCHMARK(BM_DominanceForest)->Arg(16)->Arg(64)->Arg(128);

void BM_StandardSuite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameConfig cfg{n, Rational(n + 1)};
  auto s = star_strategy(n);
  for (auto _ : state) {
    auto rep = run_suite(cfg, s, {}, {});
    benchmark::DoNotOptimize(rep.results.size());
  }
}
BENCHMARK(BM_StandardSuite)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_OptBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimum_social_cost(n, Rational(3, 2)).cost);
  }
}
BENCHMARK(BM_OptBruteForce)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
