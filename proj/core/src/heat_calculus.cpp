#include "entropyflow/heat_calculus.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "entropyflow/errors.hpp"

namespace entropyflow {

std::string entropy_kind_name(EntropyKind k) {
  switch (k) {
    case EntropyKind::renyi: return "renyi";
    case EntropyKind::tsallis: return "tsallis";
    case EntropyKind::shannon: return "shannon";
  }
  return "?";
}

EntropyKind entropy_kind_from_name(const std::string& name) {
  if (name == "renyi") return EntropyKind::renyi;
  if (name == "tsallis") return EntropyKind::tsallis;
  if (name == "shannon") return EntropyKind::shannon;
  throw std::invalid_argument("unknown entropy kind: " + name);
}

namespace {

// Raw integrals keyed for comparison inside the rewriting recursion.
struct RawKey {
  int offset;
  std::map<int, int> factors;
  bool operator<(const RawKey& rhs) const {
    if (offset != rhs.offset) return offset < rhs.offset;
    return factors < rhs.factors;
  }
};

MomentExpr reduce_impl(int offset, const std::map<int, int>& factors);

// One integration-by-parts step for max order N with exponent 1:
//   int u * p_{N-1}^e * p_N dx = -(1/(e+1)) int u' * p_{N-1}^{e+1} dx,
// u = p^{alpha+offset} * (factors of order <= N-2). The boundary term
// vanishes (dominated tails).
MomentExpr reduce_top_linear(int offset, std::map<int, int> factors) {
  const int top = factors.rbegin()->first;
  factors.erase(top);
  int e = 0;
  if (auto it = factors.find(top - 1); it != factors.end()) {
    e = it->second;
    factors.erase(it);
  }
  // remaining `factors` all have order <= N-2 and make up u together with the
  // p-power.
  const Rational scale = make_rational(-1, e + 1);
  MomentExpr out;

  // d/dx of p^{alpha+offset}: (alpha+offset) p^{alpha+offset-1} p_1
  {
    std::map<int, int> f = factors;
    f[1] += 1;
    f[top - 1] += e + 1;
    AlphaPoly coeff = AlphaPoly::linear(offset, 1);  // alpha + offset
    out += reduce_impl(offset - 1, f).scaled(coeff * scale);
  }
  // d/dx of each factor p_m^{k_m}: k_m p_m^{k_m-1} p_{m+1}
  for (const auto& [m, k] : factors) {
    std::map<int, int> f = factors;
    f[m] -= 1;
    if (f[m] == 0) f.erase(m);
    f[m + 1] += 1;
    f[top - 1] += e + 1;
    out += reduce_impl(offset, f).scaled(AlphaPoly(make_rational(k) * scale));
  }
  return out;
}

MomentExpr reduce_impl(int offset, const std::map<int, int>& factors) {
  if (factors.empty()) return MomentExpr::constant(AlphaPoly(1));
  const auto top = factors.rbegin();
  const int n = top->first;
  const int k = top->second;
  if (n == 1 && k == 1) return MomentExpr::zero();  // exact differential of p^alpha / alpha-ish
  if (k >= 2 || n == 1) {
    return MomentExpr::single(AlphaPoly(1), MomentSymbol::unchecked(factors));
  }
  return reduce_top_linear(offset, factors);
}

AlphaPoly half_alpha_alpha_minus_one() {
  // alpha(alpha-1)/2
  return AlphaPoly({make_rational(0), make_rational(-1, 2), make_rational(1, 2)});
}

std::map<MomentSymbol, MomentExpr>& ddt_memo() {
  static std::map<MomentSymbol, MomentExpr> memo;
  return memo;
}
std::mutex& ddt_memo_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

MomentExpr reduce_raw_integral(const RawIntegral& r) {
  return reduce_impl(r.offset, r.factors);
}

MomentExpr ddt_raw_integral(const RawIntegral& r) {
  // Product rule under the integral with p_t = p_2/2 and (p_m)_t = p_{m+2}/2.
  MomentExpr out;
  {
    std::map<int, int> f = r.factors;
    f[2] += 1;
    out += reduce_impl(r.offset - 1, f)
               .scaled(AlphaPoly::linear(r.offset, 1) * make_rational(1, 2));
  }
  for (const auto& [m, k] : r.factors) {
    std::map<int, int> f = r.factors;
    f[m] -= 1;
    if (f[m] == 0) f.erase(m);
    f[m + 2] += 1;
    out += reduce_impl(r.offset, f).scaled(AlphaPoly(make_rational(k, 2)));
  }
  return out;
}

MomentExpr ddt_moment_raw(const MomentSymbol& m) {
  return ddt_raw_integral(RawIntegral::of_symbol(m));
}

MomentExpr ddt_moment(const MomentSymbol& m) {
  {
    std::lock_guard<std::mutex> lock(ddt_memo_mutex());
    if (auto it = ddt_memo().find(m); it != ddt_memo().end()) return it->second;
  }
  // quotient rule against Z = int p^alpha: (I/Z)' = I'/Z + (alpha(alpha-1)/2) E[p1^2] (I/Z)
  MomentExpr result = ddt_moment_raw(m);
  MomentExpr fisher = MomentExpr::single(half_alpha_alpha_minus_one(),
                                         MomentSymbol::unchecked({{1, 2}}));
  result += fisher * MomentExpr::single(AlphaPoly(1), m);
  {
    std::lock_guard<std::mutex> lock(ddt_memo_mutex());
    ddt_memo().emplace(m, result);
  }
  return result;
}

MomentExpr ddt_expr(const MomentExpr& e) {
  std::vector<MomentTerm> acc;
  for (const auto& term : e.terms()) {
    // product rule over the symbol multiset; the coefficient is t-independent
    for (size_t i = 0; i < term.symbols.size(); ++i) {
      std::vector<MomentSymbol> rest;
      rest.reserve(term.symbols.size() - 1);
      for (size_t j = 0; j < term.symbols.size(); ++j) {
        if (j != i) rest.push_back(term.symbols[j]);
      }
      const MomentExpr dtm = ddt_moment(term.symbols[i]);
      for (const auto& dt : dtm.terms()) {
        std::vector<MomentSymbol> syms = rest;
        syms.insert(syms.end(), dt.symbols.begin(), dt.symbols.end());
        acc.emplace_back(term.coeff * dt.coeff, std::move(syms));
      }
    }
  }
  return MomentExpr(std::move(acc));
}

DerivativeResult entropy_derivative(EntropyKind kind, int k, int order_cap) {
  if (k < 1) throw std::invalid_argument("derivative order must be >= 1");
  if (k > order_cap) {
    throw ResourceLimitError("derivative order " + std::to_string(k) +
                             " exceeds configured cap " + std::to_string(order_cap));
  }
  const MomentSymbol fisher_sym = MomentSymbol::unchecked({{1, 2}});
  const AlphaPoly half_alpha({make_rational(0), make_rational(1, 2)});  // alpha/2

  DerivativeResult res;
  res.kind = kind;
  res.order = k;

  if (kind == EntropyKind::tsallis) {
    // Q_1 = (alpha/2) E[p1^2] with one power of Z in front; iterating the raw
    // derivative keeps every Q_j product-free.
    MomentExpr q = MomentExpr::single(half_alpha, fisher_sym);
    for (int j = 1; j < k; ++j) {
      std::vector<MomentTerm> acc;
      for (const auto& term : q.terms()) {
        if (term.symbols.empty()) continue;  // constants are t-independent
        const MomentExpr dtm = ddt_moment_raw(term.symbols[0]);
        for (const auto& dt : dtm.terms()) {
          acc.emplace_back(term.coeff * dt.coeff, dt.symbols);
        }
      }
      q = MomentExpr(std::move(acc));
    }
    res.expr = q;
    res.normalizer_power = 1;
    return res;
  }

  MomentExpr h = MomentExpr::single(half_alpha, fisher_sym);
  for (int j = 1; j < k; ++j) h = ddt_expr(h);
  if (kind == EntropyKind::shannon) h = h.substitute_alpha(make_rational(1));
  res.expr = h;
  res.normalizer_power = 0;
  return res;
}

MomentExpr power_concavity_expr(const AlphaPoly& beta) {
  const MomentExpr h1 = entropy_derivative(EntropyKind::renyi, 1).expr;
  const MomentExpr h2 = entropy_derivative(EntropyKind::renyi, 2).expr;
  return h2 + (h1 * h1).scaled(beta * make_rational(2));
}

}  // namespace entropyflow
