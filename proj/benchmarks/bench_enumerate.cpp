#include <benchmark/benchmark.h>

#include "hypertrees/trees.hpp"

using namespace hypertrees;

static void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    std::size_t count = 0;
    trees::enumerate_trees(n, k, 1e7, [&](const Complex&, const Integer&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateTrees)->Args({5, 2})->Args({6, 1})->Args({6, 3})->Args({6, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_SnfTorsion(benchmark::State& state) {
  const auto recs = trees::enumerate_trees(6, 2, 1e7);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trees::snf_torsion(recs[i % recs.size()].complex));
    ++i;
  }
}
BENCHMARK(BM_SnfTorsion);
