#include <benchmark/benchmark.h>

#include "cochar/hilbert.hpp"
#include "cochar/hook.hpp"

using namespace cochar;

static void BM_SeriesMul(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  Series h = hilbert_UTnE(2, 3, bound);
  for (auto _ : state) benchmark::DoNotOptimize(h * h);
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(12)->Arg(16);

static void BM_SchurDecompose(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  Series h = hilbert_UTnE(2, 3, bound);
  for (auto _ : state) benchmark::DoNotOptimize(schur_decompose(h, 3));
}
BENCHMARK(BM_SchurDecompose)->Arg(8)->Arg(12);

static void BM_MultPipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mult_expansion_UTnE(n, 3, 12));
}
BENCHMARK(BM_MultPipeline)->DenseRange(1, 3);

static void BM_HsDecompose(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  Series h = double_hilbert_UTnE(2, 2, 3, bound);
  for (auto _ : state) benchmark::DoNotOptimize(hs_decompose(h, 2, 3));
}
BENCHMARK(BM_HsDecompose)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_HookPipeline(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hook_mult_expansion_UTnE(2, 2, 3, bound));
}
BENCHMARK(BM_HookPipeline)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
