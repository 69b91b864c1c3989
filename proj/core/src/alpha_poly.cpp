#include "entropyflow/alpha_poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace entropyflow {

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long double rational_to_long_double(const Rational& q) {
  // mpq -> long double through separate num/den conversions keeps the extra
  // mantissa bits that get_d() would drop.
  long exp_num = 0, exp_den = 0;
  double num = mpz_get_d_2exp(&exp_num, q.get_num().get_mpz_t());
  double den = mpz_get_d_2exp(&exp_den, q.get_den().get_mpz_t());
  if (den == 0.0) return 0.0L;
  return static_cast<long double>(num) / static_cast<long double>(den) *
         powl(2.0L, static_cast<long double>(exp_num - exp_den));
}

Rational round_to_denominator(double value, long denominator) {
  if (denominator <= 0) throw std::invalid_argument("denominator must be positive");
  const double scaled = value * static_cast<double>(denominator);
  const double nearest = std::round(scaled);
  mpz_class num;
  mpz_set_d(num.get_mpz_t(), nearest);
  return make_rational(num, BigInt(denominator));
}

AlphaPoly::AlphaPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

AlphaPoly::AlphaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

AlphaPoly::AlphaPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

AlphaPoly AlphaPoly::alpha() { return AlphaPoly({make_rational(0), make_rational(1)}); }

AlphaPoly AlphaPoly::linear(long c0, long c1) {
  return AlphaPoly({make_rational(c0), make_rational(c1)});
}

AlphaPoly AlphaPoly::from_longs(std::initializer_list<long> coeffs) {
  std::vector<Rational> cs;
  cs.reserve(coeffs.size());
  for (long c : coeffs) cs.push_back(make_rational(c));
  return AlphaPoly(std::move(cs));
}

void AlphaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational AlphaPoly::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return make_rational(0);
  return coeffs_[i];
}

const Rational& AlphaPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading() of zero polynomial");
  return coeffs_.back();
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), make_rational(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), make_rational(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, make_rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

AlphaPoly AlphaPoly::operator*(const Rational& s) const {
  if (s == 0) return AlphaPoly();
  AlphaPoly out(*this);
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

Rational AlphaPoly::evaluate(const Rational& at) const {
  Rational acc = make_rational(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double AlphaPoly::evaluate(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

long double AlphaPoly::evaluate(long double at) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + rational_to_long_double(*it);
  }
  return acc;
}

AlphaPoly AlphaPoly::derivative() const {
  if (coeffs_.size() <= 1) return AlphaPoly();
  std::vector<Rational> out(coeffs_.size() - 1, make_rational(0));
  for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * make_rational(static_cast<long>(i));
  return AlphaPoly(std::move(out));
}

AlphaPoly AlphaPoly::pow(unsigned exponent) const {
  AlphaPoly acc(1);
  for (unsigned i = 0; i < exponent; ++i) acc *= *this;
  return acc;
}

std::pair<AlphaPoly, AlphaPoly> AlphaPoly::divmod(const AlphaPoly& rhs) const {
  if (rhs.is_zero()) throw std::invalid_argument("division by zero polynomial");
  AlphaPoly rem(*this);
  std::vector<Rational> quot;
  const int dr = rhs.degree();
  if (rem.degree() >= dr) quot.assign(rem.degree() - dr + 1, make_rational(0));
  while (!rem.is_zero() && rem.degree() >= dr) {
    const int shift = rem.degree() - dr;
    const Rational factor = rem.leading() / rhs.leading();
    quot[shift] = factor;
    // rem -= factor * alpha^shift * rhs
    for (int i = 0; i <= dr; ++i) {
      rem.coeffs_[i + shift] -= factor * rhs.coeffs_[i];
    }
    rem.trim();
  }
  return {AlphaPoly(std::move(quot)), rem};
}

std::optional<AlphaPoly> AlphaPoly::divide_exact(const AlphaPoly& rhs) const {
  auto [q, r] = divmod(rhs);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::string AlphaPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = (abs_c == 1);
    if (i == 0 || !unit) {
      os << abs_c.get_num().get_str();
      if (abs_c.get_den() != 1) os << "/" << abs_c.get_den().get_str();
    }
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

AlphaPoly linear_factor_product(std::initializer_list<long> roots) {
  AlphaPoly acc(1);
  for (long r : roots) acc *= AlphaPoly::linear(-r, 1);
  return acc;
}

}  // namespace entropyflow
