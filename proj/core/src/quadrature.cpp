#include "entropyflow/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace entropyflow {

void QuadratureConfig::validate() const {
  if (truncation_radius < 8.0) throw std::invalid_argument("truncation_radius must be >= 8");
  if (abs_tol <= 0.0 || rel_tol <= 0.0) throw std::invalid_argument("tolerances must be positive");
  if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be >= 1");
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1], computed once by Newton iteration
// so they carry full long double precision.
struct GaussRule {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};

GaussRule make_gauss_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const long double pi = 3.141592653589793238462643383279L;
  for (int i = 0; i < n; ++i) {
    long double x = cosl(pi * (static_cast<long double>(i) + 0.75L) /
                         (static_cast<long double>(n) + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (fabsl(dx) < 1e-19L * (1.0L + fabsl(x))) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0L / ((1.0L - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& g15() {
  static const GaussRule rule = make_gauss_rule(15);
  return rule;
}
const GaussRule& g7() {
  static const GaussRule rule = make_gauss_rule(7);
  return rule;
}

struct Panel {
  long double a, b;
  long double value;
  long double error;
  bool operator<(const Panel& rhs) const { return error < rhs.error; }
};

Panel eval_panel(const std::function<long double(long double)>& f, long double a,
                 long double b) {
  const long double mid = 0.5L * (a + b);
  const long double half = 0.5L * (b - a);
  long double v15 = 0.0L, v7 = 0.0L;
  const auto& r15 = g15();
  for (size_t i = 0; i < r15.nodes.size(); ++i) {
    v15 += r15.weights[i] * f(mid + half * r15.nodes[i]);
  }
  const auto& r7 = g7();
  for (size_t i = 0; i < r7.nodes.size(); ++i) {
    v7 += r7.weights[i] * f(mid + half * r7.nodes[i]);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = v15 * half;
  p.error = fabsl((v15 - v7) * half);
  return p;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<long double(long double)>& f,
                                    long double a, long double b, long double abs_tol,
                                    long double rel_tol, int max_subdivisions,
                                    int initial_panels) {
  if (!(b > a)) throw std::invalid_argument("empty integration interval");
  initial_panels = std::clamp(initial_panels, 1, std::max(1, max_subdivisions / 2));
  std::priority_queue<Panel> queue;
  long double total = 0.0L, total_err = 0.0L;
  for (int i = 0; i < initial_panels; ++i) {
    const long double pa = a + (b - a) * i / initial_panels;
    const long double pb = a + (b - a) * (i + 1) / initial_panels;
    Panel p = eval_panel(f, pa, pb);
    total += p.value;
    total_err += p.error;
    queue.push(p);
  }
  int splits = 0;
  auto target = [&]() { return std::max(abs_tol, rel_tol * fabsl(total)); };
  while (total_err > target() && splits < max_subdivisions) {
    Panel worst = queue.top();
    queue.pop();
    const long double mid = 0.5L * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at floating-point resolution; keep its estimate
      total_err -= worst.error;
      ++splits;
      continue;
    }
    Panel left = eval_panel(f, worst.a, mid);
    Panel right = eval_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++splits;
  }
  if (total_err > 100.0L * target()) {
    throw QuadratureNonConvergence("adaptive quadrature stalled: error " +
                                   std::to_string(static_cast<double>(total_err)));
  }
  return {total, total_err};
}

}  // namespace entropyflow
