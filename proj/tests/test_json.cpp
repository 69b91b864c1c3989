#include <doctest.h>

#include <json.hpp>

#include "entropyflow/identity_suite.hpp"
#include "entropyflow/json_io.hpp"

using namespace entropyflow;

TEST_CASE("moment expression JSON round-trip") {
  for (int k = 1; k <= 4; ++k) {
    const MomentExpr e = entropy_derivative(EntropyKind::renyi, k).expr;
    const std::string text = moment_expr_to_json(e);
    CHECK(moment_expr_from_json(text) == e);
    // determinism: identical expressions serialize to identical bytes
    CHECK(moment_expr_to_json(e) == text);
  }
}

TEST_CASE("schema shape matches the shared encoding") {
  const MomentExpr e = entropy_derivative(EntropyKind::renyi, 2).expr;
  const auto j = nlohmann::json::parse(moment_expr_to_json(e));
  REQUIRE(j.contains("terms"));
  const auto& term = j["terms"][0];
  REQUIRE(term.contains("coeff"));
  REQUIRE(term.contains("symbols"));
  for (const auto& c : term["coeff"]) {
    const std::string s = c.get<std::string>();
    CHECK(s.find('/') != std::string::npos);  // "p/q" strings
  }
  const auto& sym = term["symbols"][0];
  CHECK(sym.contains("factors"));
  CHECK(sym.contains("power"));
}

TEST_CASE("derivative result round-trip") {
  const DerivativeResult d = entropy_derivative(EntropyKind::tsallis, 4);
  const DerivativeResult back = derivative_result_from_json(derivative_result_to_json(d));
  CHECK(back.kind == d.kind);
  CHECK(back.order == d.order);
  CHECK(back.normalizer_power == 1);
  CHECK(back.expr == d.expr);
}

TEST_CASE("mixture JSON matches the documented schema") {
  const MixtureDensity d = mixture_from_json(
      R"({"weights":[0.5,0.5],"centers":[1,-1],"initial_variances":[0,0]})");
  CHECK(d.components() == 2);
  CHECK(d.centers() == std::vector<double>{1.0, -1.0});
  const MixtureDensity back = mixture_from_json(mixture_to_json(d));
  CHECK(back.weights() == d.weights());
  CHECK(back.centers() == d.centers());
  CHECK(back.initial_variances() == d.initial_variances());
}

TEST_CASE("fitted params round-trip") {
  FittedParams p;
  p.fit_degree = 4;
  p.round_denominator = 10;
  p.values["g1_3"] = AlphaPoly({make_rational(3, 10), make_rational(64, 10)});
  const FittedParams back = fitted_params_from_json(fitted_params_to_json(p));
  CHECK(back.fit_degree == 4);
  CHECK(back.round_denominator == 10);
  CHECK(back.values.at("g1_3") == p.values.at("g1_3"));
}

TEST_CASE("certificate JSON carries interval, evidence, and verdict") {
  PositivityCertificate cert;
  cert.lo = make_rational(1, 2);
  cert.hi = make_rational(84, 100);
  PolyEvidence ev;
  ev.poly = AlphaPoly(6);
  ev.roots_in_interval = 0;
  ev.midpoint_sign = 1;
  cert.minors.push_back(ev);
  cert.verdict = CertVerdict::positive_definite;
  const auto j = nlohmann::json::parse(certificate_to_json(cert));
  CHECK(j["interval"][0] == "1/2");
  CHECK(j["interval"][1] == "21/25");
  CHECK(j["verdict"] == "positive-definite");
  CHECK(j["minors"][0]["roots_in_interval"] == 0);
  CHECK(j["minors"][0]["midpoint_sign"] == 1);
}
