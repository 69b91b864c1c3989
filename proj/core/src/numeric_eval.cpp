#include "entropyflow/numeric_eval.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace entropyflow {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279L;

const DerivativeResult& cached_derivative(EntropyKind kind, int k) {
  static std::map<std::pair<int, int>, DerivativeResult> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), k);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, entropy_derivative(kind, k)).first;
  }
  return it->second;
}

int max_factor_order(const MomentSymbol& m) {
  return m.factors().empty() ? 0 : m.factors().rbegin()->first;
}

// Widen the truncation radius until the Gaussian tail of p^alpha times a
// polynomial of the symbol's degree sits far below the requested tolerance.
double effective_radius(double base_radius, double alpha, int poly_degree, double tol) {
  double r = base_radius;
  const double log_tol = std::log(std::max(tol, 1e-300)) - 12.0;
  for (int iter = 0; iter < 64; ++iter) {
    const double log_tail =
        -0.5 * alpha * r * r + poly_degree * std::log(std::max(r, 2.0));
    if (log_tail <= log_tol) break;
    r *= 1.15;
  }
  return r;
}

std::pair<long double, long double> domain_for(const MixtureDensity& d, double t, double radius) {
  const double sigma_max = std::sqrt(d.max_initial_variance() + t);
  return {static_cast<long double>(d.min_center() - radius * sigma_max),
          static_cast<long double>(d.max_center() + radius * sigma_max)};
}

int initial_panel_count(const MixtureDensity& d, double t, long double a, long double b) {
  const double sigma_min = std::sqrt(d.min_initial_variance() + t);
  const double width = static_cast<double>(b - a);
  return std::clamp(static_cast<int>(width / sigma_min) + 4, 8, 256);
}

struct MomentCache {
  std::map<MomentSymbol, std::pair<long double, long double>> values;  // value, rel err
};

long double moment_with_cache(const MixtureDensity& d, const MomentSymbol& m, double alpha,
                              double t, const QuadratureConfig& q, MomentCache& cache,
                              long double& rel_err) {
  auto it = cache.values.find(m);
  if (it != cache.values.end()) {
    rel_err = it->second.second;
    return it->second.first;
  }
  long double re = 0.0L;
  const long double v = moment_eval_ld(d, m, alpha, t, q, &re);
  cache.values.emplace(m, std::make_pair(v, re));
  rel_err = re;
  return v;
}

// ---- spectral differentiation -------------------------------------------

struct ChebSeries {
  std::vector<long double> coeffs;  // f = sum a_j T_j
  long double mid, half;
  long double noise_level;
};

ChebSeries chebyshev_interpolate(const std::function<long double(long double)>& f,
                                 long double a, long double b, int degree) {
  const int n = degree;
  std::vector<long double> values(n + 1);
  const long double mid = 0.5L * (a + b);
  const long double half = 0.5L * (b - a);
  for (int j = 0; j <= n; ++j) {
    const long double x = cosl(kPi * j / n);
    values[j] = f(mid + half * x);
  }
  ChebSeries s;
  s.mid = mid;
  s.half = half;
  s.coeffs.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    long double acc = 0.5L * (values[0] + ((k % 2 == 0) ? values[n] : -values[n]));
    for (int j = 1; j < n; ++j) acc += values[j] * cosl(kPi * j * k / n);
    s.coeffs[k] = 2.0L * acc / n;
  }
  s.coeffs[0] *= 0.5L;
  s.coeffs[n] *= 0.5L;
  // noise floor from the high-order tail
  long double tail = 0.0L;
  for (int k = n - 7; k <= n; ++k) tail = std::max(tail, fabsl(s.coeffs[k]));
  s.noise_level = tail;
  return s;
}

// Truncate at the coefficient plateau so differentiation does not amplify
// quadrature noise; returns the retained degree.
int truncate_series(ChebSeries& s, int k_deriv) {
  long double scale = 0.0L;
  for (const auto& c : s.coeffs) scale = std::max(scale, fabsl(c));
  const long double floor_level = std::max(s.noise_level * 8.0L, scale * 1e-18L);
  int keep = static_cast<int>(s.coeffs.size()) - 1;
  while (keep > k_deriv + 2 && fabsl(s.coeffs[keep]) <= floor_level) --keep;
  for (size_t j = keep + 1; j < s.coeffs.size(); ++j) s.coeffs[j] = 0.0L;
  return keep;
}

std::vector<long double> differentiate_coeffs(const std::vector<long double>& a,
                                              long double half) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<long double> b(a.size(), 0.0L);
  // b_{j-1} = b_{j+1} + 2 j a_j, downward; then interval scaling
  for (int j = n; j >= 1; --j) {
    b[j - 1] = (j + 1 <= n ? b[j + 1] : 0.0L) + 2.0L * j * a[j];
  }
  b[0] *= 0.5L;
  for (auto& c : b) c /= half;
  b.pop_back();
  return b;
}

long double clenshaw(const std::vector<long double>& a, long double x) {
  long double b1 = 0.0L, b2 = 0.0L;
  for (int j = static_cast<int>(a.size()) - 1; j >= 1; --j) {
    const long double b0 = 2.0L * x * b1 - b2 + a[j];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + a[0];
}

}  // namespace

EvalPoint::EvalPoint(double alpha_, double t_) : alpha(alpha_), t(t_) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
}

bool EvalPoint::shannon_route() const { return std::abs(alpha - 1.0) < kShannonAlphaWindow; }

std::pair<long double, long double> integration_domain(const MixtureDensity& d, double t,
                                                       const QuadratureConfig& q) {
  q.validate();
  return domain_for(d, t, q.truncation_radius);
}

long double tilted_normalizer(const MixtureDensity& d, double alpha, double t,
                              const QuadratureConfig& q) {
  q.validate();
  const double radius = effective_radius(q.truncation_radius, alpha, 0, q.rel_tol);
  auto [a, b] = domain_for(d, t, radius);
  auto f = [&](long double x) {
    long double dummy;
    const long double p = d.density_and_ratios(x, t, 0, &dummy);
    return powl(p, static_cast<long double>(alpha));
  };
  return integrate_adaptive(f, a, b, q.abs_tol, q.rel_tol, q.max_subdivisions,
                            initial_panel_count(d, t, a, b))
      .value;
}

double stability_eval(const MixtureDensity& d, double alpha, double t,
                      const QuadratureConfig& q) {
  return static_cast<double>(tilted_normalizer(d, alpha, t, q));
}

long double moment_eval_ld(const MixtureDensity& d, const MomentSymbol& m, double alpha,
                           double t, const QuadratureConfig& q, long double* rel_error) {
  q.validate();
  if (m.is_unit()) {
    if (rel_error) *rel_error = 0.0L;
    return 1.0L;
  }
  const int top = max_factor_order(m);
  const double radius =
      effective_radius(q.truncation_radius, alpha, m.total_order() + 2, q.rel_tol);
  auto [a, b] = domain_for(d, t, radius);
  std::vector<long double> pbar(top + 1);
  auto numerator = [&](long double x) {
    const long double p = d.density_and_ratios(x, t, top, pbar.data());
    long double acc = powl(p, static_cast<long double>(alpha));
    for (const auto& [order, exp] : m.factors()) {
      for (int e = 0; e < exp; ++e) acc *= pbar[order];
    }
    return acc;
  };
  auto denominator = [&](long double x) {
    long double dummy;
    const long double p = d.density_and_ratios(x, t, 0, &dummy);
    return powl(p, static_cast<long double>(alpha));
  };
  const int panels = initial_panel_count(d, t, a, b);
  const QuadratureResult num =
      integrate_adaptive(numerator, a, b, q.abs_tol, q.rel_tol, q.max_subdivisions, panels);
  const QuadratureResult den =
      integrate_adaptive(denominator, a, b, q.abs_tol, q.rel_tol, q.max_subdivisions, panels);
  if (rel_error) {
    const long double num_rel = fabsl(num.value) > 0 ? num.error / fabsl(num.value) : num.error;
    const long double den_rel = den.error / den.value;
    *rel_error = num_rel + den_rel + 4e-19L;
  }
  return num.value / den.value;
}

double moment_eval(const MixtureDensity& d, const MomentSymbol& m, const EvalPoint& at,
                   const QuadratureConfig& q) {
  return static_cast<double>(moment_eval_ld(d, m, at.alpha, at.t, q, nullptr));
}

long double entropy_eval_ld(const MixtureDensity& d, EntropyKind kind, double alpha, double t,
                            const QuadratureConfig& q) {
  q.validate();
  const bool shannon = (kind == EntropyKind::shannon) ||
                       std::abs(alpha - 1.0) < kShannonAlphaWindow;
  if (shannon) {
    const double radius = effective_radius(q.truncation_radius, 1.0, 2, q.rel_tol);
    auto [a, b] = domain_for(d, t, radius);
    auto f = [&](long double x) {
      long double dummy;
      const long double p = d.density_and_ratios(x, t, 0, &dummy);
      return p > 0.0L ? -p * logl(p) : 0.0L;
    };
    return integrate_adaptive(f, a, b, q.abs_tol, q.rel_tol, q.max_subdivisions,
                              initial_panel_count(d, t, a, b))
        .value;
  }
  const long double z = tilted_normalizer(d, alpha, t, q);
  const long double one_minus_alpha = 1.0L - static_cast<long double>(alpha);
  if (kind == EntropyKind::tsallis) return (z - 1.0L) / one_minus_alpha;
  return logl(z) / one_minus_alpha;
}

double entropy_eval(const MixtureDensity& d, EntropyKind kind, const EvalPoint& at,
                    const QuadratureConfig& q) {
  return static_cast<double>(entropy_eval_ld(d, kind, at.alpha, at.t, q));
}

DerivativeValue evaluate_expr(const MixtureDensity& d, const MomentExpr& expr,
                              int normalizer_power, const EvalPoint& at,
                              const QuadratureConfig& q) {
  MomentCache cache;
  const long double alpha_ld = static_cast<long double>(at.alpha);
  long double total = 0.0L;
  long double err = 0.0L;
  for (const auto& term : expr.terms()) {
    long double term_value = term.coeff.evaluate(alpha_ld);
    long double term_rel = 1e-18L;
    for (const auto& sym : term.symbols) {
      long double rel = 0.0L;
      term_value *= moment_with_cache(d, sym, at.alpha, at.t, q, cache, rel);
      term_rel += rel;
    }
    total += term_value;
    err += fabsl(term_value) * term_rel;
  }
  if (normalizer_power != 0) {
    const long double z = tilted_normalizer(d, at.alpha, at.t, q);
    const long double zp = powl(z, static_cast<long double>(normalizer_power));
    total *= zp;
    err = err * zp + fabsl(total) * static_cast<long double>(q.rel_tol);
  }
  return {static_cast<double>(total), static_cast<double>(err)};
}

namespace {

DerivativeValue engine_derivative(const MixtureDensity& d, EntropyKind kind, int k,
                                  const EvalPoint& at, const QuadratureConfig& q) {
  EntropyKind effective = kind;
  if (kind == EntropyKind::renyi && at.shannon_route()) effective = EntropyKind::shannon;
  const DerivativeResult& symbolic = cached_derivative(effective, k);
  return evaluate_expr(d, symbolic.expr, symbolic.normalizer_power, at, q);
}

DerivativeValue spectral_derivative(const MixtureDensity& d, EntropyKind kind, int k,
                                    const EvalPoint& at, const QuadratureConfig& q) {
  if (k > 9) {
    throw SpectralIllConditioned("spectral differentiation limited to k <= 9, got " +
                                 std::to_string(k));
  }
  QuadratureConfig tight = q;
  tight.rel_tol = std::min(q.rel_tol, 1e-16);
  tight.abs_tol = std::min(q.abs_tol, 1e-16);
  tight.truncation_radius = std::max(q.truncation_radius, 16.0);

  const long double a = static_cast<long double>(at.t) / 2.0L;
  const long double b = 2.0L * static_cast<long double>(at.t);
  constexpr int kDegree = 64;
  auto entropy_at = [&](long double tau) {
    return entropy_eval_ld(d, kind, at.alpha, static_cast<double>(tau), tight);
  };
  ChebSeries series = chebyshev_interpolate(entropy_at, a, b, kDegree);
  const int kept = truncate_series(series, k);

  std::vector<long double> coeffs = series.coeffs;
  coeffs.resize(kept + 1);
  for (int pass = 0; pass < k; ++pass) coeffs = differentiate_coeffs(coeffs, series.half);
  const long double x0 =
      (static_cast<long double>(at.t) - series.mid) / series.half;  // = -1/3
  const long double value = clenshaw(coeffs, x0);

  // noise amplification through k differentiations of T_j at an interior point
  long double amp = 0.0L;
  for (int j = 1; j <= kept; ++j) amp += powl(static_cast<long double>(j), k);
  const long double err =
      series.noise_level * amp * powl(1.3L / series.half, k) + fabsl(value) * 1e-17L;
  return {static_cast<double>(value), static_cast<double>(err)};
}

}  // namespace

DerivativeValue derivative_eval(const MixtureDensity& d, EntropyKind kind, int k,
                                const EvalPoint& at, const QuadratureConfig& q,
                                EvalRoute route) {
  if (k < 1) throw std::invalid_argument("derivative order must be >= 1");
  if (route == EvalRoute::engine) return engine_derivative(d, kind, k, at, q);
  return spectral_derivative(d, kind, k, at, q);
}

EntropyBoundsResult entropy_bounds(double alpha, double t, double sigma2) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  EntropyBoundsResult out;
  const bool shannonish = std::abs(alpha - 1.0) < kShannonAlphaWindow;
  const double order_term = shannonish ? 0.5 : std::log(alpha) / (2.0 * (alpha - 1.0));
  out.lower = 0.5 * std::log(2.0 * kPi * t) + order_term;
  if (shannonish) return out;  // upper bound defined only off alpha = 1
  if (alpha > 1.0) {
    // Renyi entropy is nonincreasing in the order, so h_alpha <= h, and the
    // Shannon entropy is maximized at fixed variance by the Gaussian:
    // h(G_{t+sigma^2}) = log(2 pi e (t+sigma^2)) / 2.
    out.upper = 0.5 * std::log(2.0 * kPi * (t + sigma2)) + 0.5;
  } else if (alpha > 1.0 / 3.0) {
    // Pearson type VII maximizers at matched variance
    const double one_minus = 1.0 - alpha;
    const double a_big = (1.0 + alpha) / (2.0 * one_minus);
    const double b_big = 1.0 / one_minus;
    out.upper = std::log(2.0 * alpha / (3.0 * alpha - 1.0)) / one_minus +
                (std::lgamma(a_big) - std::lgamma(b_big)) +
                0.5 * std::log(kPi * (3.0 * alpha - 1.0) * (t + sigma2) / one_minus);
  }
  return out;
}

Tsallis2Check tsallis2_identity_check(const MixtureDensity& d, int k, double t,
                                      const QuadratureConfig& q, EvalRoute route) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Tsallis2Check out;
  out.lhs = derivative_eval(d, EntropyKind::tsallis, k, EvalPoint(2.0, t), q, route).value;
  q.validate();
  auto [a, b] = domain_for(d, t, effective_radius(q.truncation_radius, 2.0, 2 * k, q.rel_tol));
  std::vector<long double> buf(k + 1);
  auto f = [&](long double x) {
    d.derivatives(x, static_cast<long double>(t), k, buf.data());
    return buf[k] * buf[k];
  };
  const long double integral =
      integrate_adaptive(f, a, b, q.abs_tol, q.rel_tol, q.max_subdivisions,
                         initial_panel_count(d, t, a, b))
          .value;
  out.rhs = static_cast<double>((k % 2 == 1 ? 1.0L : -1.0L) * integral);
  return out;
}

}  // namespace entropyflow
