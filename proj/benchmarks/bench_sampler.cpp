#include <benchmark/benchmark.h>

#include "hypertrees/sampler.hpp"

using namespace hypertrees;

static void BM_ExactDraw(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        measure::sample(5, 2, 1, i++, measure::SampleMethod::exact));
}
BENCHMARK(BM_ExactDraw);

static void BM_FloatDraw(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        measure::sample(n, 2, 1, i++, measure::SampleMethod::floating));
}
BENCHMARK(BM_FloatDraw)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_WilsonUst(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(measure::wilson_ust(n, rng));
}
BENCHMARK(BM_WilsonUst)->Arg(100)->Arg(1000);
