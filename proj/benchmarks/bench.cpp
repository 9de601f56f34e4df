#include <benchmark/benchmark.h>

#include "pmod/decomp.hpp"
#include "pmod/erode.hpp"
#include "pmod/fixtures.hpp"
#include "pmod/prune.hpp"

using namespace pmod;

static void BM_HomBasis(benchmark::State& state) {
  Grid g = Grid::square(2, (int)state.range(0));
  ModPtr M = random_module(g, kDefaultP, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(*M, *M));
}
BENCHMARK(BM_HomBasis)->Arg(4)->Arg(6)->Arg(8);

static void BM_Erosion(benchmark::State& state) {
  ModPtr M = square_with_legs(2);
  for (auto _ : state) benchmark::DoNotOptimize(erosion(*M, 2).module);
}
BENCHMARK(BM_Erosion);

static void BM_Pruning(benchmark::State& state) {
  ModPtr M = square_with_legs(2);
  for (auto _ : state) benchmark::DoNotOptimize(pruning(*M, 2).module);
}
BENCHMARK(BM_Pruning);

static void BM_Decompose(benchmark::State& state) {
  Grid g = Grid::square(2, 6);
  ModPtr M = random_module(g, kDefaultP, 3);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(*M).parts.size());
}
BENCHMARK(BM_Decompose);

BENCHMARK_MAIN();
