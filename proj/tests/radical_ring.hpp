#pragma once

// Test-only polynomial ring Q[x0, x1, ...] with square-rewrite rules
// x_i^2 -> P_i(x0..x_{i-1}) for designated radical variables. Lets the tests
// verify the reference sqrt-laden closed-form certificates as exact identities:
// declare s = sqrt(E) via a rule s^2 = E, substitute, normalize to zero.

#include <map>
#include <vector>

#include "entropyflow/alpha_poly.hpp"

namespace radical {

using entropyflow::AlphaPoly;
using entropyflow::Rational;
using entropyflow::make_rational;

class Ring;

class RPoly {
 public:
  RPoly() = default;
  RPoly(const Ring* ring, Rational constant);

  static RPoly var(const Ring* ring, int index);

  RPoly operator-() const;
  RPoly operator+(const RPoly& rhs) const;
  RPoly operator-(const RPoly& rhs) const;
  RPoly operator*(const RPoly& rhs) const;
  RPoly operator*(const Rational& s) const;

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const RPoly& rhs) const { return terms_ == rhs.terms_; }

 private:
  friend class Ring;
  using Key = std::vector<int>;  // exponent per variable
  const Ring* ring_ = nullptr;
  std::map<Key, Rational> terms_;
  void reduce();
  void prune();
};

class Ring {
 public:
  explicit Ring(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }

  // Declare x_index^2 = square (square may use only lower-index variables).
  void set_square_rule(int index, RPoly square) { rules_[index] = std::move(square); }
  const std::map<int, RPoly>& rules() const { return rules_; }

  RPoly constant(const Rational& c) const { return RPoly(this, c); }
  RPoly constant(long c) const { return RPoly(this, make_rational(c)); }
  RPoly var(int index) const { return RPoly::var(this, index); }

  // Embed an AlphaPoly with alpha mapped to variable `alpha_index`.
  RPoly embed(const AlphaPoly& p, int alpha_index = 0) const {
    RPoly acc = constant(0);
    RPoly a = var(alpha_index);
    for (int i = p.degree(); i >= 0; --i) {
      acc = acc * a + constant(p.coefficient(i));
    }
    return acc;
  }

 private:
  int nvars_;
  std::map<int, RPoly> rules_;
};

inline RPoly::RPoly(const Ring* ring, Rational constant) : ring_(ring) {
  if (constant != 0) terms_.emplace(Key(ring->nvars(), 0), std::move(constant));
}

inline RPoly RPoly::var(const Ring* ring, int index) {
  RPoly p;
  p.ring_ = ring;
  Key k(ring->nvars(), 0);
  k[index] = 1;
  p.terms_.emplace(std::move(k), make_rational(1));
  return p;
}

inline void RPoly::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

inline void RPoly::reduce() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [index, square] : ring_->rules()) {
      for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->first[index] < 2) continue;
        Key base = it->first;
        base[index] -= 2;
        const Rational coeff = it->second;
        terms_.erase(it);
        for (const auto& [skey, scoeff] : square.terms_) {
          Key merged = base;
          for (int v = 0; v < static_cast<int>(merged.size()); ++v) merged[v] += skey[v];
          auto [jt, inserted] = terms_.emplace(merged, coeff * scoeff);
          if (!inserted) jt->second += coeff * scoeff;
        }
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  prune();
}

inline RPoly RPoly::operator-() const {
  RPoly out(*this);
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

inline RPoly RPoly::operator+(const RPoly& rhs) const {
  RPoly out(*this);
  if (!out.ring_) out.ring_ = rhs.ring_;
  for (const auto& [k, c] : rhs.terms_) {
    auto [it, inserted] = out.terms_.emplace(k, c);
    if (!inserted) it->second += c;
  }
  out.prune();
  return out;
}

inline RPoly RPoly::operator-(const RPoly& rhs) const { return *this + (-rhs); }

inline RPoly RPoly::operator*(const RPoly& rhs) const {
  RPoly out;
  out.ring_ = ring_ ? ring_ : rhs.ring_;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      Key merged = ka;
      for (int v = 0; v < static_cast<int>(merged.size()); ++v) merged[v] += kb[v];
      auto [it, inserted] = out.terms_.emplace(std::move(merged), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  out.prune();
  if (out.ring_) out.reduce();
  return out;
}

inline RPoly RPoly::operator*(const Rational& s) const {
  RPoly out(*this);
  for (auto& [k, c] : out.terms_) c = c * s;
  out.prune();
  return out;
}

}  // namespace radical
