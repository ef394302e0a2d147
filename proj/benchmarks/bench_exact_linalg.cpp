#include <benchmark/benchmark.h>

#include "hypertrees/boundary.hpp"
#include "hypertrees/snf.hpp"

using namespace hypertrees;

static void BM_Determinant(benchmark::State& state) {
  auto hat = hat_boundary(static_cast<int>(state.range(0)), 2);
  IntMatrix gram = hat.entries * hat.entries.transposed();
  for (auto _ : state) benchmark::DoNotOptimize(determinant(gram));
}
BENCHMARK(BM_Determinant)->Arg(6)->Arg(8)->Arg(10);

static void BM_SmithNormalForm(benchmark::State& state) {
  auto d = boundary_matrix(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(d.entries));
}
BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(7)->Arg(8);

static void BM_BoundaryBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boundary_matrix(n, 3));
}
BENCHMARK(BM_BoundaryBuild)->Arg(8)->Arg(10)->Arg(12);
