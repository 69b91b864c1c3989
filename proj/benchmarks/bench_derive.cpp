#include <benchmark/benchmark.h>

#include "entropyflow/heat_calculus.hpp"
#include "entropyflow/raw_integral.hpp"

using namespace entropyflow;

static void BM_EntropyDerivativeRenyi(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(entropy_derivative(EntropyKind::renyi, k));
  }
}
BENCHMARK(BM_EntropyDerivativeRenyi)->DenseRange(2, 9);

static void BM_EntropyDerivativeTsallis(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(entropy_derivative(EntropyKind::tsallis, k));
  }
}
BENCHMARK(BM_EntropyDerivativeTsallis)->DenseRange(4, 9);

static void BM_ReduceRawIntegral(benchmark::State& state) {
  const RawIntegral r(-2, {{3, 1}, {5, 1}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_raw_integral(r));
  }
}
BENCHMARK(BM_ReduceRawIntegral);
