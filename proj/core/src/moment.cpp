#include "entropyflow/moment.hpp"

#include <algorithm>
#include <sstream>

#include "entropyflow/errors.hpp"
#include "entropyflow/raw_integral.hpp"

namespace entropyflow {

bool MomentSymbol::is_canonical(const std::map<int, int>& factors) {
  if (factors.empty()) return true;
  for (const auto& [order, exp] : factors) {
    if (order < 1 || exp < 1) return false;
  }
  // top derivative order must carry exponent >= 2
  return factors.rbegin()->second >= 2;
}

MomentSymbol MomentSymbol::make(const std::map<int, int>& factors) {
  std::map<int, int> cleaned;
  for (const auto& [order, exp] : factors) {
    if (exp == 0) continue;
    cleaned.emplace(order, exp);
  }
  if (!is_canonical(cleaned)) {
    MomentSymbol tmp;
    tmp.factors_ = cleaned;
    throw NonCanonicalError("factor map is not canonical: " + tmp.to_string());
  }
  MomentSymbol m;
  m.factors_ = std::move(cleaned);
  return m;
}

MomentSymbol MomentSymbol::unchecked(std::map<int, int> factors) {
  MomentSymbol m;
  m.factors_ = std::move(factors);
  return m;
}

int MomentSymbol::exponent_of(int order) const {
  auto it = factors_.find(order);
  return it == factors_.end() ? 0 : it->second;
}

int MomentSymbol::total_order() const {
  int d = 0;
  for (const auto& [order, exp] : factors_) d += order * exp;
  return d;
}

std::strong_ordering MomentSymbol::operator<=>(const MomentSymbol& rhs) const {
  if (auto c = total_order() <=> rhs.total_order(); c != 0) return c;
  if (factors_ < rhs.factors_) return std::strong_ordering::less;
  if (rhs.factors_ < factors_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string MomentSymbol::to_string() const {
  if (is_unit()) return "E[1]";
  std::ostringstream os;
  os << "E[";
  bool first = true;
  for (const auto& [order, exp] : factors_) {
    if (!first) os << " ";
    first = false;
    os << "p" << order;
    if (exp > 1) os << "^" << exp;
  }
  os << "]";
  return os.str();
}

MomentTerm::MomentTerm(AlphaPoly c, std::vector<MomentSymbol> syms)
    : coeff(std::move(c)), symbols(std::move(syms)) {
  std::erase_if(symbols, [](const MomentSymbol& m) { return m.is_unit(); });
  std::sort(symbols.begin(), symbols.end());
}

int MomentTerm::total_order() const {
  int d = 0;
  for (const auto& m : symbols) d += m.total_order();
  return d;
}

std::strong_ordering compare_symbol_multisets(const std::vector<MomentSymbol>& a,
                                              const std::vector<MomentSymbol>& b) {
  int da = 0, db = 0;
  for (const auto& m : a) da += m.total_order();
  for (const auto& m : b) db += m.total_order();
  if (auto c = da <=> db; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

MomentExpr::MomentExpr(std::vector<MomentTerm> terms) : terms_(std::move(terms)) { normalize(); }

MomentExpr MomentExpr::single(AlphaPoly coeff, MomentSymbol sym) {
  std::vector<MomentSymbol> syms;
  if (!sym.is_unit()) syms.push_back(std::move(sym));
  return MomentExpr({MomentTerm(std::move(coeff), std::move(syms))});
}

MomentExpr MomentExpr::constant(AlphaPoly coeff) {
  return MomentExpr({MomentTerm(std::move(coeff), {})});
}

bool MomentExpr::is_product_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const MomentTerm& t) { return t.symbols.size() <= 1; });
}

void MomentExpr::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const MomentTerm& a, const MomentTerm& b) {
    return compare_symbol_multisets(a.symbols, b.symbols) < 0;
  });
  std::vector<MomentTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && compare_symbol_multisets(merged.back().symbols, t.symbols) == 0) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const MomentTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

MomentExpr MomentExpr::operator-() const {
  MomentExpr out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MomentExpr& MomentExpr::operator+=(const MomentExpr& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  normalize();
  return *this;
}

MomentExpr& MomentExpr::operator-=(const MomentExpr& rhs) {
  *this += -rhs;
  return *this;
}

MomentExpr MomentExpr::operator*(const MomentExpr& rhs) const {
  std::vector<MomentTerm> out;
  out.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      std::vector<MomentSymbol> syms = a.symbols;
      syms.insert(syms.end(), b.symbols.begin(), b.symbols.end());
      out.emplace_back(a.coeff * b.coeff, std::move(syms));
    }
  }
  return MomentExpr(std::move(out));
}

MomentExpr MomentExpr::scaled(const AlphaPoly& s) const {
  if (s.is_zero()) return MomentExpr();
  MomentExpr out(*this);
  for (auto& t : out.terms_) t.coeff *= s;
  out.normalize();
  return out;
}

MomentExpr MomentExpr::substitute_alpha(const Rational& value) const {
  std::vector<MomentTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.emplace_back(AlphaPoly(t.coeff.evaluate(value)), t.symbols);
  }
  return MomentExpr(std::move(out));
}

AlphaPoly MomentExpr::coefficient_of(const std::vector<MomentSymbol>& multiset) const {
  std::vector<MomentSymbol> key = multiset;
  std::erase_if(key, [](const MomentSymbol& m) { return m.is_unit(); });
  std::sort(key.begin(), key.end());
  for (const auto& t : terms_) {
    if (compare_symbol_multisets(t.symbols, key) == 0) return t.coeff;
  }
  return AlphaPoly();
}

std::string MomentExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.to_string() << ")";
    if (t.symbols.empty()) {
      os << "*1";
    } else {
      for (const auto& m : t.symbols) os << "*" << m.to_string();
    }
  }
  return os.str();
}

MomentExpr expr_normalize(const MomentExpr& e) {
  return MomentExpr(e.terms());  // constructor normalizes
}

RawIntegral::RawIntegral(int offset_, std::map<int, int> factors_)
    : offset(offset_), factors(std::move(factors_)) {
  std::erase_if(factors, [](const auto& kv) { return kv.second == 0; });
  int sum_exponents = 0;
  for (const auto& [order, exp] : factors) {
    if (order < 1 || exp < 0) throw HomogeneityViolation("bad factor in " + to_string());
    sum_exponents += exp;
  }
  if (offset != -sum_exponents) {
    throw HomogeneityViolation("offset " + std::to_string(offset) + " != -sum(exponents) in " +
                               to_string());
  }
}

RawIntegral RawIntegral::of_symbol(const MomentSymbol& m) {
  int sum_exponents = 0;
  for (const auto& [order, exp] : m.factors()) sum_exponents += exp;
  return RawIntegral(-sum_exponents, m.factors());
}

int RawIntegral::total_order() const {
  int d = 0;
  for (const auto& [order, exp] : factors) d += order * exp;
  return d;
}

std::string RawIntegral::to_string() const {
  std::ostringstream os;
  os << "int p^(a" << (offset >= 0 ? "+" : "") << offset << ")";
  for (const auto& [order, exp] : factors) {
    os << " p" << order;
    if (exp > 1) os << "^" << exp;
  }
  os << " dx";
  return os.str();
}

}  // namespace entropyflow
