#include "entropyflow/poly_matrix.hpp"

#include <map>
#include <stdexcept>

namespace entropyflow {

void PolyMatrix::set(int i, int j, const AlphaPoly& v) {
  entries_[static_cast<size_t>(i) * n_ + j] = v;
  entries_[static_cast<size_t>(j) * n_ + i] = v;
}

PolyMatrix PolyMatrix::leading_block(int k) const {
  PolyMatrix out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) out.set(i, j, at(i, j));
  }
  return out;
}

std::vector<Rational> PolyMatrix::evaluate(const Rational& alpha) const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& p : entries_) out.push_back(p.evaluate(alpha));
  return out;
}

namespace {

// Laplace expansion along the last row with column-subset memoization;
// exact and division-free, workable for the n <= 10 sizes used here.
AlphaPoly det_by_expansion(const PolyMatrix& m, int k) {
  std::map<unsigned, AlphaPoly> memo;  // column bitmask (|S| rows used)
  memo[0u] = AlphaPoly(1);
  // build up row by row: efficiency comes from iterating masks of equal popcount
  std::vector<std::vector<unsigned>> by_count(k + 1);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    by_count[__builtin_popcount(mask)].push_back(mask);
  }
  for (int row = 0; row < k; ++row) {
    std::map<unsigned, AlphaPoly> next;
    for (unsigned mask : by_count[row]) {
      auto it = memo.find(mask);
      if (it == memo.end() || it->second.is_zero()) continue;
      int parity = 0;
      for (int col = 0; col < k; ++col) {
        if (mask & (1u << col)) {
          ++parity;
          continue;
        }
        const AlphaPoly& entry = m.at(row, col);
        if (!entry.is_zero()) {
          AlphaPoly contrib = it->second * entry;
          if ((row + parity) % 2 == 1) contrib = -contrib;
          auto [jt, inserted] = next.emplace(mask | (1u << col), contrib);
          if (!inserted) jt->second += contrib;
        }
      }
    }
    memo = std::move(next);
  }
  auto it = memo.find((1u << k) - 1);
  return it == memo.end() ? AlphaPoly() : it->second;
}

}  // namespace

std::vector<AlphaPoly> principal_minors(const PolyMatrix& m) {
  const int n = m.size();
  std::vector<AlphaPoly> minors(n);

  // Bareiss fraction-free elimination: after step k the pivot a[k][k] equals
  // the k-th leading principal minor. Falls back to cofactor expansion from
  // the first zero pivot on.
  std::vector<std::vector<AlphaPoly>> a(n, std::vector<AlphaPoly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  }
  AlphaPoly prev_pivot(1);
  int completed = 0;
  for (int k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) break;
    minors[k] = a[k][k];
    ++completed;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        AlphaPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = num.divide_exact(prev_pivot);
        if (!q) throw std::logic_error("Bareiss exact division failed");
        a[i][j] = std::move(*q);
      }
    }
    prev_pivot = a[k][k];
  }
  for (int k = completed; k < n; ++k) {
    minors[k] = det_by_expansion(m, k + 1);
  }
  return minors;
}

AlphaPoly poly_determinant(const PolyMatrix& m) {
  if (m.size() == 0) return AlphaPoly(1);
  return principal_minors(m).back();
}

}  // namespace entropyflow
