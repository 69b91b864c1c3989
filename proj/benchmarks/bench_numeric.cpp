#include <benchmark/benchmark.h>

#include "entropyflow/numeric_eval.hpp"

using namespace entropyflow;

namespace {
const MixtureDensity& two_point() {
  static MixtureDensity d({0.5, 0.5}, {1.0, -1.0}, {0.0, 0.0});
  return d;
}
}  // namespace

static void BM_MomentEval(benchmark::State& state) {
  const QuadratureConfig q;
  const EvalPoint at(1.5, 1.0);
  const MomentSymbol m = MomentSymbol::make({{1, 2}, {2, 2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_eval(two_point(), m, at, q));
  }
}
BENCHMARK(BM_MomentEval);

static void BM_EngineDerivative(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  QuadratureConfig q;
  q.rel_tol = 1e-13;
  const EvalPoint at(1.5, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        derivative_eval(two_point(), EntropyKind::renyi, k, at, q, EvalRoute::engine));
  }
}
BENCHMARK(BM_EngineDerivative)->DenseRange(1, 5);

static void BM_SpectralDerivative(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  QuadratureConfig q;
  const EvalPoint at(1.5, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        derivative_eval(two_point(), EntropyKind::renyi, k, at, q, EvalRoute::spectral));
  }
}
BENCHMARK(BM_SpectralDerivative)->Arg(2)->Arg(6);

static void BM_DensityDerivatives(benchmark::State& state) {
  long double out[10];
  for (auto _ : state) {
    two_point().derivatives(0.33L, 0.8L, 9, out);
    benchmark::DoNotOptimize(out[9]);
  }
}
BENCHMARK(BM_DensityDerivatives);

BENCHMARK_MAIN();
