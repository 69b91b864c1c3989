#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "entropyflow/rational.hpp"

namespace entropyflow {

// Univariate polynomial in the entropy order alpha, exact rational
// coefficients, coefficient i multiplies alpha^i. The zero polynomial is the
// empty coefficient vector; otherwise the last coefficient is nonzero.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(long constant) : AlphaPoly(make_rational(constant)) {}  // NOLINT(runtime/explicit)
  AlphaPoly(const Rational& constant);                              // NOLINT(runtime/explicit)
  explicit AlphaPoly(std::vector<Rational> coeffs);
  AlphaPoly(std::initializer_list<Rational> coeffs);

  static AlphaPoly alpha();                       // the monomial alpha
  static AlphaPoly linear(long c0, long c1);      // c0 + c1*alpha
  static AlphaPoly from_longs(std::initializer_list<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  const Rational& leading() const;

  AlphaPoly operator-() const;
  AlphaPoly& operator+=(const AlphaPoly& rhs);
  AlphaPoly& operator-=(const AlphaPoly& rhs);
  AlphaPoly& operator*=(const AlphaPoly& rhs);
  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(AlphaPoly a, const AlphaPoly& b) { return a *= b; }
  AlphaPoly operator*(const Rational& s) const;

  bool operator==(const AlphaPoly& rhs) const = default;

  Rational evaluate(const Rational& at) const;
  double evaluate(double at) const;
  long double evaluate(long double at) const;

  AlphaPoly derivative() const;
  AlphaPoly pow(unsigned exponent) const;

  // Exact quotient; nullopt when rhs does not divide *this exactly.
  std::optional<AlphaPoly> divide_exact(const AlphaPoly& rhs) const;

  // Quotient/remainder over the rationals (rhs nonzero).
  std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& rhs) const;

  std::string to_string(const std::string& var = "a") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline AlphaPoly operator*(const Rational& s, const AlphaPoly& p) { return p * s; }

// Product of linear factors (alpha - r1)(alpha - r2)... given the constants r_i.
AlphaPoly linear_factor_product(std::initializer_list<long> roots);

}  // namespace entropyflow
