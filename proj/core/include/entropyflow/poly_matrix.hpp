#pragma once

#include <vector>

#include "entropyflow/alpha_poly.hpp"

namespace entropyflow {

// Symmetric matrix of exact alpha-polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  const AlphaPoly& at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, const AlphaPoly& v);  // keeps symmetry

  PolyMatrix leading_block(int k) const;

  // Exact evaluation at a rational point.
  std::vector<Rational> evaluate(const Rational& alpha) const;  // row-major

  bool operator==(const PolyMatrix& rhs) const = default;

 private:
  int n_ = 0;
  std::vector<AlphaPoly> entries_;
};

// Leading principal minors of orders 1..n, exact. Fraction-free (Bareiss)
// elimination when pivots stay nonzero, cofactor fallback otherwise.
std::vector<AlphaPoly> principal_minors(const PolyMatrix& m);

// Exact determinant of the full matrix.
AlphaPoly poly_determinant(const PolyMatrix& m);

}  // namespace entropyflow
