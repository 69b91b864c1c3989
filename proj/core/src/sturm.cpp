#include "entropyflow/sturm.hpp"

#include <algorithm>
#include <stdexcept>

#include "entropyflow/errors.hpp"

namespace entropyflow {

namespace {

// Dense integer polynomial, ascending powers, nonzero leading coefficient.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly to_zpoly(const AlphaPoly& p) {
  BigInt lcm_den(1);
  for (const auto& c : p.coefficients()) {
    BigInt den = c.get_den();
    lcm_den = lcm(lcm_den, den);
  }
  ZPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Rational scaled = c * Rational(lcm_den);
    out.push_back(scaled.get_num());
  }
  trim(out);
  return out;
}

BigInt content(const ZPoly& p) {
  BigInt g(0);
  for (const auto& c : p) g = gcd(g, c);
  return g == 0 ? BigInt(1) : g;
}

void make_primitive(ZPoly& p) {
  const BigInt g = content(p);
  if (g == 1) return;
  for (auto& c : p) c /= g;
}

ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly out(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
  return out;
}

// Pseudo-remainder of lc(g)^(deg f - deg g + 1) * f by g; integer-exact.
// Returns the remainder scaled so its sign equals the sign of the true
// rational remainder of f by g.
ZPoly signed_pseudo_rem(ZPoly f, const ZPoly& g) {
  const int dg = static_cast<int>(g.size()) - 1;
  const BigInt lc = g.back();
  int df = static_cast<int>(f.size()) - 1;
  const int steps = df - dg + 1;
  if (steps <= 0) return f;
  // scale factor lc^steps; fix the sign afterwards if it is negative
  for (int s = 0; s < steps && !f.empty(); ++s) {
    df = static_cast<int>(f.size()) - 1;
    if (df < dg) {
      // degree dropped early: keep scaling so the total factor stays lc^steps
      for (auto& c : f) c *= lc;
      continue;
    }
    const BigInt top = f.back();
    for (auto& c : f) c *= lc;
    for (int i = 0; i <= dg; ++i) {
      f[df - dg + i] -= top * g[i];
    }
    trim(f);
  }
  const bool flip = (sgn(lc) < 0) && (steps % 2 == 1);
  if (flip) {
    for (auto& c : f) c = -c;
  }
  return f;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  make_primitive(a);
  make_primitive(b);
  while (!b.empty()) {
    ZPoly r = signed_pseudo_rem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

AlphaPoly zpoly_to_alpha(const ZPoly& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) coeffs.push_back(Rational(c));
  return AlphaPoly(std::move(coeffs));
}

ZPoly zdivide_exact(const ZPoly& f, const ZPoly& g) {
  auto q = zpoly_to_alpha(f).divide_exact(zpoly_to_alpha(g));
  if (!q) throw std::logic_error("inexact polynomial division in Sturm chain");
  ZPoly out = to_zpoly(*q);
  make_primitive(out);
  return out;
}

std::vector<ZPoly> sturm_chain(const AlphaPoly& p) {
  ZPoly p0 = to_zpoly(p);
  make_primitive(p0);
  // square-free part first so multiple roots count once
  {
    ZPoly d = derivative(p0);
    ZPoly g = zgcd(p0, d);
    if (static_cast<int>(g.size()) - 1 >= 1) {
      if (sgn(g.back()) < 0) {
        for (auto& c : g) c = -c;
      }
      ZPoly reduced = zdivide_exact(p0, g);
      // exact division can flip the leading sign; normalize to match p0
      if (!reduced.empty() && sgn(reduced.back()) != sgn(p0.back())) {
        for (auto& c : reduced) c = -c;
      }
      p0 = std::move(reduced);
    }
  }
  std::vector<ZPoly> chain;
  chain.push_back(p0);
  ZPoly p1 = derivative(p0);
  make_primitive(p1);
  if (!p1.empty()) chain.push_back(p1);
  while (chain.size() >= 2 && !chain.back().empty() &&
         static_cast<int>(chain.back().size()) > 1) {
    ZPoly r = signed_pseudo_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    make_primitive(r);
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int zsign_at(const ZPoly& p, const Rational& x) {
  Rational acc = make_rational(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
  return sgn(acc);
}

int zsign_at_infinity(const ZPoly& p, bool positive) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (!positive && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int variations_at(const std::vector<ZPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(zsign_at(q, x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<ZPoly>& chain, bool positive) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(zsign_at_infinity(q, positive));
  return variations(signs);
}

}  // namespace

AlphaPoly square_free_part(const AlphaPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square_free_part of zero polynomial");
  return zpoly_to_alpha(sturm_chain(p).front());
}

int sturm_root_count(const AlphaPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_root_count of zero polynomial");
  if (lo >= hi) throw std::invalid_argument("empty interval");
  if (p.evaluate(lo) == 0 || p.evaluate(hi) == 0) {
    throw EndpointRootError("polynomial vanishes at an interval endpoint");
  }
  const auto chain = sturm_chain(p);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

int sturm_total_roots(const AlphaPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_total_roots of zero polynomial");
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

Rational root_bound(const AlphaPoly& p) {
  if (p.is_zero() || p.degree() == 0) return make_rational(1);
  Rational max_ratio = make_rational(0);
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coefficient(i)) / lead;
    if (r > max_ratio) max_ratio = r;
  }
  return make_rational(1) + max_ratio;
}

std::pair<Rational, Rational> refine_root_interval(const AlphaPoly& p, Rational lo, Rational hi,
                                                   const Rational& width) {
  if (sturm_root_count(p, lo, hi) != 1) {
    throw std::invalid_argument("interval does not isolate exactly one root");
  }
  const auto chain = sturm_chain(p);
  int v_lo = variations_at(chain, lo);
  int v_hi = variations_at(chain, hi);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (p.evaluate(mid) == 0) {
      // nudge the midpoint off the root; the interval still shrinks
      mid = lo + (hi - lo) * make_rational(13, 32);
      if (p.evaluate(mid) == 0) break;
    }
    const int v_mid = variations_at(chain, mid);
    if (v_lo - v_mid == 1) {
      hi = mid;
      v_hi = v_mid;
    } else {
      lo = mid;
      v_lo = v_mid;
    }
  }
  (void)v_hi;
  return {lo, hi};
}

}  // namespace entropyflow
