#include "entropyflow/identity_suite.hpp"

#include "entropyflow/raw_integral.hpp"

namespace entropyflow {

namespace {

MomentSymbol S(std::map<int, int> f) { return MomentSymbol::unchecked(std::move(f)); }

AlphaPoly frac(long num, long den) { return AlphaPoly(make_rational(num, den)); }

// product of (alpha - r) over the listed constants
AlphaPoly lf(std::initializer_list<long> roots) { return linear_factor_product(roots); }

AlphaPoly aa1() {  // alpha(alpha-1)
  return AlphaPoly::alpha() * AlphaPoly::linear(-1, 1);
}

MomentTerm term(AlphaPoly c, std::vector<MomentSymbol> syms) {
  return MomentTerm(std::move(c), std::move(syms));
}

MomentExpr expr(std::vector<MomentTerm> terms) { return MomentExpr(std::move(terms)); }

MomentExpr reduce(int offset, std::map<int, int> factors) {
  return reduce_raw_integral(RawIntegral(offset, std::move(factors)));
}

MomentExpr ddt_raw(int offset, std::map<int, int> factors) {
  return ddt_raw_integral(RawIntegral(offset, std::move(factors)));
}

}  // namespace

MomentExpr expected_renyi_derivative(int k) {
  const MomentSymbol e12 = S({{1, 2}});
  const MomentSymbol e14 = S({{1, 4}});
  const MomentSymbol e22 = S({{2, 2}});
  const AlphaPoly a = AlphaPoly::alpha();
  switch (k) {
    case 1:
      return expr({term(a * frac(1, 2), {e12})});
    case 2:
      return expr({term(a * lf({2, 3}) * frac(1, 12), {e14}),
                   term(a * frac(-6, 12), {e22}),
                   term(a * aa1() * frac(3, 12), {e12, e12})});
    case 3:
      return expr({term(a * lf({2, 3, 4, 5}) * frac(3, 120), {S({{1, 6}})}),
                   term(a * lf({2, 3}) * frac(-9, 12), {S({{1, 2}, {2, 2}})}),
                   term(a * aa1() * lf({2, 3}) * frac(3, 24), {e14, e12}),
                   term(a * lf({2}) * frac(-6, 12), {S({{2, 3}})}),
                   term(a * frac(6, 12), {S({{3, 2}})}),
                   term(a * aa1() * frac(-9, 12), {e12, e22}),
                   term(a * aa1() * aa1() * frac(3, 12), {e12, e12, e12})});
    case 4:
      return expr({term(a * lf({2, 3, 4, 5, 6, 7}) * frac(3, 28 * 12), {S({{1, 8}})}),
                   term(a * lf({2, 3, 4, 5}) * frac(-9, 12), {S({{1, 4}, {2, 2}})}),
                   term(a * aa1() * lf({2, 3, 4, 5}) * frac(3, 60), {S({{1, 6}}), e12}),
                   term(a * lf({2, 3, 4}) * frac(-24, 12), {S({{1, 2}, {2, 3}})}),
                   term(a * lf({2, 3}) * frac(-9, 12), {S({{2, 4}})}),
                   term(a * lf({2, 3}) * frac(12, 12), {S({{1, 2}, {3, 2}})}),
                   term(a * aa1() * lf({2, 3}) * frac(-18, 12), {e12, S({{1, 2}, {2, 2}})}),
                   term(a * aa1() * aa1() * lf({2, 3}) * frac(3, 12), {e12, e12, e14}),
                   term(a * aa1() * lf({2, 2, 3, 3}) * frac(1, 48), {e14, e14}),
                   term(a * aa1() * lf({2, 3}) * frac(-3, 12), {e14, e22}),
                   term(a * lf({2}) * frac(24, 12), {S({{2, 1}, {3, 2}})}),
                   term(a * aa1() * lf({2}) * frac(-12, 12), {S({{2, 3}}), e12}),
                   term(a * frac(-6, 12), {S({{4, 2}})}),
                   term(a * aa1() * frac(12, 12), {e12, S({{3, 2}})}),
                   term(a * aa1() * frac(9, 12), {e22, e22}),
                   term(a * aa1() * aa1() * frac(-18, 12), {e12, e12, e22}),
                   term(a * aa1() * aa1() * aa1() * frac(9, 24), {e12, e12, e12, e12})});
    default:
      throw std::invalid_argument("expected_renyi_derivative supports k = 1..4");
  }
}

MomentExpr expected_tsallis4_derivative() {
  const AlphaPoly a = AlphaPoly::alpha();
  return expr({term(a * lf({2, 3, 4, 5, 6, 7}) * frac(3, 28 * 12), {S({{1, 8}})}),
               term(a * lf({2, 3, 4, 5}) * frac(-9, 12), {S({{1, 4}, {2, 2}})}),
               term(a * lf({2, 3, 4}) * frac(-24, 12), {S({{1, 2}, {2, 3}})}),
               term(a * lf({2, 3}) * frac(-9, 12), {S({{2, 4}})}),
               term(a * lf({2, 3}) * frac(12, 12), {S({{1, 2}, {3, 2}})}),
               term(a * lf({2}) * frac(24, 12), {S({{2, 1}, {3, 2}})}),
               term(a * frac(-6, 12), {S({{4, 2}})})});
}

std::vector<IdentityCheck> run_identity_suite() {
  std::vector<IdentityCheck> checks;
  auto add = [&checks](std::string group, std::string name, MomentExpr computed,
                       MomentExpr expected) {
    IdentityCheck c;
    c.group = std::move(group);
    c.name = std::move(name);
    c.pass = (computed == expected);
    c.computed = std::move(computed);
    c.expected = std::move(expected);
    checks.push_back(std::move(c));
  };

  const MomentSymbol e12 = S({{1, 2}});
  const MomentSymbol e14 = S({{1, 4}});
  const MomentSymbol e16 = S({{1, 6}});
  const MomentSymbol e18 = S({{1, 8}});
  const MomentSymbol e22 = S({{2, 2}});
  const MomentSymbol e23 = S({{2, 3}});
  const MomentSymbol e24 = S({{2, 4}});
  const MomentSymbol e32 = S({{3, 2}});
  const MomentSymbol e42 = S({{4, 2}});
  const MomentSymbol e1222 = S({{1, 2}, {2, 2}});
  const MomentSymbol e1422 = S({{1, 4}, {2, 2}});
  const MomentSymbol e1223 = S({{1, 2}, {2, 3}});
  const MomentSymbol e1232 = S({{1, 2}, {3, 2}});
  const MomentSymbol e2132 = S({{2, 1}, {3, 2}});

  // --- second-derivative bookkeeping (6 identities) ------------------------
  add("2nd-derivative", "int p^(a-3) p_t p1^2",
      reduce(-3, {{1, 2}, {2, 1}}).scaled(frac(1, 2)),
      expr({term(AlphaPoly::linear(3, -1) * frac(1, 6), {e14})}));
  add("2nd-derivative", "int p^(a-2) p1 p_xt",
      reduce(-2, {{1, 1}, {3, 1}}).scaled(frac(1, 2)),
      expr({term(lf({2, 3}) * frac(1, 6), {e14}), term(frac(-1, 2), {e22})}));
  add("2nd-derivative", "int p^(a-2) p1 p_xt, intermediate form",
      reduce(-2, {{1, 1}, {3, 1}}).scaled(frac(1, 2)),
      reduce(-3, {{1, 2}, {2, 1}}).scaled(AlphaPoly::linear(2, -1) * frac(1, 2)) +
          MomentExpr::single(frac(-1, 2), e22));
  add("2nd-derivative", "int p^(a-3) p1^2 p2", reduce(-3, {{1, 2}, {2, 1}}),
      expr({term(AlphaPoly::linear(3, -1) * frac(1, 3), {e14})}));
  add("2nd-derivative", "d/dt int p^(a-2) p1^2", ddt_raw(-2, {{1, 2}}),
      expr({term(lf({2, 3}) * frac(1, 6), {e14}), term(frac(-1, 1), {e22})}));
  add("2nd-derivative", "d/dt int p^a", ddt_raw(0, {}),
      expr({term(aa1() * frac(-1, 2), {e12})}));

  // --- third-derivative reductions (8 identities) --------------------------
  add("3rd-derivative", "int p^(a-5) p1^4 p2", reduce(-5, {{1, 4}, {2, 1}}),
      expr({term(AlphaPoly::linear(5, -1) * frac(1, 5), {e16})}));
  add("3rd-derivative", "int p^(a-4) p1^3 p3", reduce(-4, {{1, 3}, {3, 1}}),
      expr({term(lf({4, 5}) * frac(1, 5), {e16}), term(frac(-3, 1), {e1222})}));
  add("3rd-derivative", "int p^(a-3) p1 p2 p3", reduce(-3, {{1, 1}, {2, 1}, {3, 1}}),
      expr({term(AlphaPoly::linear(3, -1) * frac(1, 2), {e1222}),
            term(frac(-1, 2), {e23})}));
  add("3rd-derivative", "int p^(a-2) p2 p4", reduce(-2, {{2, 1}, {4, 1}}),
      expr({term(lf({2, 3}) * frac(1, 2), {e1222}),
            term(AlphaPoly::linear(-2, 1) * frac(1, 2), {e23}), term(frac(-1, 1), {e32})}));
  add("3rd-derivative", "int p^(a-3) p1^2 p2 (revisited)", reduce(-3, {{1, 2}, {2, 1}}),
      expr({term(AlphaPoly::linear(3, -1) * frac(1, 3), {e14})}));
  add("3rd-derivative", "int p^(a-2) p1 p3", reduce(-2, {{1, 1}, {3, 1}}),
      expr({term(lf({2, 3}) * frac(1, 3), {e14}), term(frac(-1, 1), {e22})}));
  add("3rd-derivative", "int p^(a-1) p4", reduce(-1, {{4, 1}}),
      expr({term(lf({1, 2, 3}) * frac(-1, 3), {e14}),
            term(AlphaPoly::linear(-1, 1), {e22})}));
  add("3rd-derivative", "int p^(a-3) p1^2 p4", reduce(-3, {{1, 2}, {4, 1}}),
      expr({term(lf({3, 4, 5}) * frac(-1, 5), {e16}),
            term(AlphaPoly::linear(-3, 1) * frac(4, 1), {e1222}), term(frac(1, 1), {e23})}));

  // --- third-derivative time derivatives (2) -------------------------------
  add("3rd-derivative", "d/dt int p^(a-4) p1^4", ddt_raw(-4, {{1, 4}}),
      expr({term(lf({4, 5}) * frac(3, 10), {e16}), term(frac(-6, 1), {e1222})}));
  add("3rd-derivative", "d/dt int p^(a-2) p2^2", ddt_raw(-2, {{2, 2}}),
      expr({term(lf({2, 3}) * frac(1, 2), {e1222}), term(AlphaPoly::linear(-2, 1), {e23}),
            term(frac(-1, 1), {e32})}));

  // --- fourth-derivative reductions (9) -------------------------------------
  add("4th-derivative", "int p^(a-7) p2 p1^6", reduce(-7, {{1, 6}, {2, 1}}),
      expr({term(AlphaPoly::linear(7, -1) * frac(1, 7), {e18})}));
  add("4th-derivative", "int p^(a-6) p1^5 p3", reduce(-6, {{1, 5}, {3, 1}}),
      expr({term(lf({6, 7}) * frac(1, 7), {e18}), term(frac(-5, 1), {e1422})}));
  add("4th-derivative", "int p^(a-5) p1^3 p2 p3", reduce(-5, {{1, 3}, {2, 1}, {3, 1}}),
      expr({term(AlphaPoly::linear(5, -1) * frac(1, 2), {e1422}),
            term(frac(-3, 2), {e1223})}));
  add("4th-derivative", "int p^(a-4) p1 p2^2 p3", reduce(-4, {{1, 1}, {2, 2}, {3, 1}}),
      expr({term(AlphaPoly::linear(4, -1) * frac(1, 3), {e1223}),
            term(frac(-1, 3), {e24})}));
  add("4th-derivative", "int p^(a-4) p1^2 p2 p4", reduce(-4, {{1, 2}, {2, 1}, {4, 1}}),
      expr({term(lf({4, 5}) * frac(1, 2), {e1422}),
            term(AlphaPoly::linear(-4, 1) * frac(13, 6), {e1223}),
            term(frac(2, 3), {e24}), term(frac(-1, 1), {e1232})}));
  add("4th-derivative", "int p^(a-3) p2^2 p4", reduce(-3, {{2, 2}, {4, 1}}),
      expr({term(lf({3, 4}) * frac(1, 3), {e1223}),
            term(AlphaPoly::linear(-3, 1) * frac(1, 3), {e24}),
            term(frac(-2, 1), {e2132})}));
  add("4th-derivative", "int p^(a-3) p1 p3 p4", reduce(-3, {{1, 1}, {3, 1}, {4, 1}}),
      expr({term(AlphaPoly::linear(3, -1) * frac(1, 2), {e1232}),
            term(frac(-1, 2), {e2132})}));
  add("4th-derivative", "int p^(a-2) p3 p5", reduce(-2, {{3, 1}, {5, 1}}),
      expr({term(lf({2, 3}) * frac(1, 2), {e1232}),
            term(AlphaPoly::linear(-2, 1) * frac(1, 2), {e2132}),
            term(frac(-1, 1), {e42})}));
  add("4th-derivative", "int p^(a-5) p1^4 p4", reduce(-5, {{1, 4}, {4, 1}}),
      expr({term(lf({5, 6, 7}) * frac(-1, 7), {e18}),
            term(AlphaPoly::linear(-5, 1) * frac(7, 1), {e1422}),
            term(frac(6, 1), {e1223})}));

  // --- fourth-derivative time derivatives (4) -------------------------------
  add("4th-derivative", "d/dt int p^(a-6) p1^6", ddt_raw(-6, {{1, 6}}),
      expr({term(lf({6, 7}) * frac(5, 14), {e18}), term(frac(-15, 1), {e1422})}));
  add("4th-derivative", "d/dt int p^(a-4) p1^2 p2^2", ddt_raw(-4, {{1, 2}, {2, 2}}),
      expr({term(AlphaPoly::linear(-4, 1) * frac(7, 3), {e1223}), term(frac(1, 3), {e24}),
            term(frac(-1, 1), {e1232}), term(lf({4, 5}) * frac(1, 2), {e1422})}));
  add("4th-derivative", "d/dt int p^(a-3) p2^3", ddt_raw(-3, {{2, 3}}),
      expr({term(lf({3, 4}) * frac(1, 2), {e1223}), term(AlphaPoly::linear(-3, 1), {e24}),
            term(frac(-3, 1), {e2132})}));
  add("4th-derivative", "d/dt int p^(a-2) p3^2", ddt_raw(-2, {{3, 2}}),
      expr({term(lf({2, 3}) * frac(1, 2), {e1232}), term(AlphaPoly::linear(-2, 1), {e2132}),
            term(frac(-1, 1), {e42})}));

  // --- normalized moment derivatives (8 lemma lines) ------------------------
  const AlphaPoly half_aa1 = aa1() * frac(1, 2);
  add("moment-ddt", "d/dt E[p1^4]", ddt_moment(e14),
      expr({term(lf({4, 5}) * frac(3, 10), {e16}), term(frac(-6, 1), {e1222}),
            term(half_aa1, {e14, e12})}));
  add("moment-ddt", "d/dt E[p2^2]", ddt_moment(e22),
      expr({term(lf({2, 3}) * frac(1, 2), {e1222}), term(AlphaPoly::linear(-2, 1), {e23}),
            term(frac(-1, 1), {e32}), term(half_aa1, {e12, e22})}));
  add("moment-ddt", "d/dt E[p1^2]", ddt_moment(e12),
      expr({term(lf({2, 3}) * frac(1, 6), {e14}), term(frac(-1, 1), {e22}),
            term(half_aa1, {e12, e12})}));
  add("moment-ddt", "d/dt (E[p1^2])^2",
      ddt_expr(expr({term(AlphaPoly(1), {e12, e12})})),
      expr({term(lf({2, 3}) * frac(1, 3), {e12, e14}), term(frac(-2, 1), {e12, e22}),
            term(aa1(), {e12, e12, e12})}));
  add("moment-ddt", "d/dt E[p1^6]", ddt_moment(e16),
      expr({term(lf({6, 7}) * frac(5, 14), {e18}), term(frac(-15, 1), {e1422}),
            term(half_aa1, {e16, e12})}));
  add("moment-ddt", "d/dt E[p1^2 p2^2]", ddt_moment(e1222),
      expr({term(lf({4, 5}) * frac(1, 2), {e1422}),
            term(AlphaPoly::linear(-4, 1) * frac(7, 3), {e1223}), term(frac(1, 3), {e24}),
            term(frac(-1, 1), {e1232}), term(half_aa1, {e12, e1222})}));
  add("moment-ddt", "d/dt E[p2^3]", ddt_moment(e23),
      expr({term(lf({3, 4}) * frac(1, 2), {e1223}), term(AlphaPoly::linear(-3, 1), {e24}),
            term(frac(-3, 1), {e2132}), term(half_aa1, {e23, e12})}));
  add("moment-ddt", "d/dt E[p3^2]", ddt_moment(e32),
      expr({term(lf({2, 3}) * frac(1, 2), {e1232}), term(AlphaPoly::linear(-2, 1), {e2132}),
            term(frac(-1, 1), {e42}), term(half_aa1, {e12, e32})}));

  // --- entropy derivative formulas -------------------------------------------
  for (int k = 1; k <= 4; ++k) {
    add("entropy-derivative", "renyi k=" + std::to_string(k),
        entropy_derivative(EntropyKind::renyi, k).expr, expected_renyi_derivative(k));
  }
  add("entropy-derivative", "tsallis k=4",
      entropy_derivative(EntropyKind::tsallis, 4).expr, expected_tsallis4_derivative());

  return checks;
}

}  // namespace entropyflow
