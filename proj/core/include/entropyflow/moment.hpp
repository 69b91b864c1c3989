#pragma once

#include <map>
#include <string>
#include <vector>

#include "entropyflow/alpha_poly.hpp"

namespace entropyflow {

// Canonical tilted moment E_a[prod (p_n/p)^{k_n}]. The empty factor map is the
// unit E_a[1] = 1. Canonical means the top derivative order appears with
// exponent >= 2, so integration by parts cannot reduce it further.
class MomentSymbol {
 public:
  MomentSymbol() = default;  // unit
  static MomentSymbol unit() { return MomentSymbol(); }

  // Validates canonicality; throws NonCanonicalError otherwise.
  static MomentSymbol make(const std::map<int, int>& factors);

  // Skips validation for symbols produced by the rewriting engine, which only
  // emits canonical ones.
  static MomentSymbol unchecked(std::map<int, int> factors);

  static bool is_canonical(const std::map<int, int>& factors);

  bool is_unit() const { return factors_.empty(); }
  const std::map<int, int>& factors() const { return factors_; }
  int exponent_of(int order) const;

  // Total derivative order D = sum n*k_n.
  int total_order() const;

  // Ordering: (total order, lexicographic factor map).
  std::strong_ordering operator<=>(const MomentSymbol& rhs) const;
  bool operator==(const MomentSymbol& rhs) const { return factors_ == rhs.factors_; }

  std::string to_string() const;  // e.g. "E[p1^4 p2^2]"

 private:
  std::map<int, int> factors_;
};

// coefficient * product of symbols; the multiset of symbols is kept sorted,
// unit symbols are never stored.
struct MomentTerm {
  AlphaPoly coeff;
  std::vector<MomentSymbol> symbols;

  MomentTerm() = default;
  MomentTerm(AlphaPoly c, std::vector<MomentSymbol> syms);

  int total_order() const;
  bool operator==(const MomentTerm& rhs) const = default;
};

// Ordering of symbol multisets: by total order, then length, then elementwise.
std::strong_ordering compare_symbol_multisets(const std::vector<MomentSymbol>& a,
                                              const std::vector<MomentSymbol>& b);

// Normalized linear combination of symbol products. Zero is the empty term
// list; no two terms share a symbol multiset; terms sorted canonically.
class MomentExpr {
 public:
  MomentExpr() = default;
  explicit MomentExpr(std::vector<MomentTerm> terms);
  static MomentExpr zero() { return MomentExpr(); }
  static MomentExpr single(AlphaPoly coeff, MomentSymbol sym);
  static MomentExpr constant(AlphaPoly coeff);  // coeff * E[1]

  const std::vector<MomentTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // True when every term has at most one (non-unit) symbol.
  bool is_product_free() const;

  MomentExpr operator-() const;
  MomentExpr& operator+=(const MomentExpr& rhs);
  MomentExpr& operator-=(const MomentExpr& rhs);
  friend MomentExpr operator+(MomentExpr a, const MomentExpr& b) { return a += b; }
  friend MomentExpr operator-(MomentExpr a, const MomentExpr& b) { return a -= b; }
  MomentExpr operator*(const MomentExpr& rhs) const;
  MomentExpr scaled(const AlphaPoly& s) const;

  MomentExpr substitute_alpha(const Rational& value) const;

  // Exact coefficient of a given symbol multiset (zero polynomial if absent).
  AlphaPoly coefficient_of(const std::vector<MomentSymbol>& multiset) const;

  bool operator==(const MomentExpr& rhs) const = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<MomentTerm> terms_;
};

// Merges duplicate multisets, drops zero coefficients, sorts. Idempotent.
MomentExpr expr_normalize(const MomentExpr& e);

}  // namespace entropyflow
