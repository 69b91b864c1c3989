#pragma once

#include <gmpxx.h>

#include <string>

namespace entropyflow {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den >= 1 after
// canonicalize(); every constructor here canonicalizes so the invariant holds
// everywhere downstream.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Throws std::invalid_argument on garbage.
Rational rational_from_string(const std::string& s);

// Always "p/q" form, canonical, e.g. "6/1", "-3/10".
std::string rational_to_string(const Rational& q);

inline double rational_to_double(const Rational& q) { return q.get_d(); }
long double rational_to_long_double(const Rational& q);

// Nearest rational with the given positive denominator; ties round away from zero.
Rational round_to_denominator(double value, long denominator);

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace entropyflow
