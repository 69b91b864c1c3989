#include <benchmark/benchmark.h>

#include "entropyflow/certificate.hpp"
#include "entropyflow/gram.hpp"
#include "entropyflow/sturm.hpp"

using namespace entropyflow;

namespace {

// k=3 fitted family (the degree-16 fourth minor dominates)
AssembledGram fitted_family() {
  auto p = build_gram_problem(entropy_derivative(EntropyKind::renyi, 3),
                              default_gram_basis(3, EntropyKind::renyi),
                              default_slack_spec(3, EntropyKind::renyi));
  FittedParams params;
  params.values["g2_4"] = AlphaPoly({make_rational(3, 10), make_rational(64, 10),
                                     make_rational(-87, 10), make_rational(11, 10),
                                     make_rational(8, 10)});
  params.values["g1_3"] = AlphaPoly({make_rational(94, 10), make_rational(-249, 10),
                                     make_rational(491, 10), make_rational(-486, 10),
                                     make_rational(177, 10)});
  params.values["g2_3"] = AlphaPoly({make_rational(-257, 10), make_rational(1146, 10),
                                     make_rational(-2626, 10), make_rational(2622, 10),
                                     make_rational(-942, 10)});
  params.values["s0"] = AlphaPoly({make_rational(0), make_rational(-2, 10),
                                   make_rational(6, 10), make_rational(-4, 10)});
  params.values["s1"] = AlphaPoly({make_rational(5, 10), make_rational(-23, 10),
                                   make_rational(56, 10), make_rational(-37, 10)});
  return assemble_matrix(p, params);
}

}  // namespace

static void BM_PrincipalMinors(benchmark::State& state) {
  const auto fam = fitted_family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(principal_minors(fam.matrix));
  }
}
BENCHMARK(BM_PrincipalMinors);

static void BM_SturmRootCount(benchmark::State& state) {
  const auto fam = fitted_family();
  const AlphaPoly minor4 = principal_minors(fam.matrix)[3];
  const Rational lo = make_rational(1, 2), hi = make_rational(84, 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sturm_root_count(minor4, lo, hi));
  }
}
BENCHMARK(BM_SturmRootCount);

static void BM_CertifyInterval(benchmark::State& state) {
  const auto fam = fitted_family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_interval(fam.matrix, fam.slack_values,
                                              make_rational(1, 2), make_rational(84, 100)));
  }
}
BENCHMARK(BM_CertifyInterval);
