#include <benchmark/benchmark.h>

#include "hypertrees/spectral.hpp"

using namespace hypertrees;

static void BM_LinkUnionSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(spectral::sample_link_union(n, 2, 12, seed++));
}
BENCHMARK(BM_LinkUnionSample)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Lambda2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = spectral::sample_link_union(n, 2, 12, 99);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::lambda2(g));
}
BENCHMARK(BM_Lambda2)->Arg(200)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Lambda2Dense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = spectral::sample_link_union(n, 2, 12, 99);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::spectrum_dense(g));
}
BENCHMARK(BM_Lambda2Dense)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);
