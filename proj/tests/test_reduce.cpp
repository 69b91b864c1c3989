#include <doctest.h>

#include "entropyflow/identity_suite.hpp"
#include "entropyflow/raw_integral.hpp"

using namespace entropyflow;

namespace {
MomentSymbol S(std::map<int, int> f) { return MomentSymbol::unchecked(std::move(f)); }
}  // namespace

TEST_CASE("exact differentials reduce to zero") {
  CHECK(reduce_raw_integral(RawIntegral(-1, {{1, 1}})).is_zero());
}

TEST_CASE("already-canonical integrals pass through with coefficient 1") {
  const MomentExpr e = reduce_raw_integral(RawIntegral(-4, {{1, 4}}));
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms()[0].coeff == AlphaPoly(1));
  CHECK(e.terms()[0].symbols[0] == S({{1, 4}}));
}

TEST_CASE("empty factor map reduces to the unit") {
  const MomentExpr e = reduce_raw_integral(RawIntegral(0, {}));
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms()[0].symbols.empty());
  CHECK(e.terms()[0].coeff == AlphaPoly(1));
}

TEST_CASE("spec reduction examples") {
  // int p^(a-3) p1^2 p2 -> -((a-3)/3) E[p1^4]
  const MomentExpr a = reduce_raw_integral(RawIntegral(-3, {{1, 2}, {2, 1}}));
  CHECK(a == MomentExpr::single(AlphaPoly::linear(3, -1) * make_rational(1, 3), S({{1, 4}})));

  // int p^(a-5) p1^4 p2 -> -((a-5)/5) E[p1^6]
  const MomentExpr b = reduce_raw_integral(RawIntegral(-5, {{1, 4}, {2, 1}}));
  CHECK(b == MomentExpr::single(AlphaPoly::linear(5, -1) * make_rational(1, 5), S({{1, 6}})));
}

TEST_CASE("order conservation through rewriting") {
  const std::vector<RawIntegral> cases = {
      RawIntegral(-2, {{1, 1}, {3, 1}}), RawIntegral(-2, {{3, 1}, {5, 1}}),
      RawIntegral(-3, {{1, 2}, {4, 1}}), RawIntegral(-1, {{6, 1}})};
  for (const auto& r : cases) {
    const int d = r.total_order();
    for (const auto& t : reduce_raw_integral(r).terms()) {
      CHECK(t.total_order() == d);
    }
  }
}

TEST_CASE("ddt raises total order by exactly 2 and stays product-free") {
  const std::vector<MomentSymbol> symbols = {S({{1, 2}}), S({{1, 4}}), S({{2, 2}}),
                                             S({{3, 2}}), S({{1, 2}, {2, 2}})};
  for (const auto& m : symbols) {
    const MomentExpr d = ddt_moment_raw(m);
    CHECK(d.is_product_free());
    for (const auto& t : d.terms()) {
      CHECK(t.total_order() == m.total_order() + 2);
    }
  }
}

TEST_CASE("every symbol the engine produces is canonical with even order") {
  for (int k = 1; k <= 6; ++k) {
    const DerivativeResult d = entropy_derivative(EntropyKind::renyi, k);
    for (const auto& t : d.expr.terms()) {
      for (const auto& m : t.symbols) {
        CHECK(MomentSymbol::is_canonical(m.factors()));
        CHECK(m.total_order() % 2 == 0);
      }
    }
  }
}

TEST_CASE("identity suite: every reference reduction holds exactly") {
  const auto checks = run_identity_suite();
  int reductions = 0;
  for (const auto& c : checks) {
    CAPTURE(c.group);
    CAPTURE(c.name);
    CHECK(c.pass);
    if (c.group == "2nd-derivative" || c.group == "3rd-derivative" ||
        c.group == "4th-derivative") {
      ++reductions;
    }
  }
  CHECK(reductions == 29);
}
