#pragma once

#include <map>
#include <optional>

#include "entropyflow/heat_calculus.hpp"
#include "entropyflow/mixture.hpp"
#include "entropyflow/quadrature.hpp"

namespace entropyflow {

// alpha within kShannonAlphaWindow of 1 routes to the Shannon formulas.
inline constexpr double kShannonAlphaWindow = 1e-9;

struct EvalPoint {
  double alpha;
  double t;

  EvalPoint(double alpha_, double t_);
  bool shannon_route() const;
};

// Integration domain for a density at time t under the given config.
std::pair<long double, long double> integration_domain(const MixtureDensity& d, double t,
                                                       const QuadratureConfig& q);

// Z = int p^alpha dx (the alpha-stability S_t^alpha).
long double tilted_normalizer(const MixtureDensity& d, double alpha, double t,
                              const QuadratureConfig& q);

double stability_eval(const MixtureDensity& d, double alpha, double t,
                      const QuadratureConfig& q);

// E_alpha[prod (p_i/p)^{k_i}] by adaptive quadrature over the truncated
// domain.
double moment_eval(const MixtureDensity& d, const MomentSymbol& m, const EvalPoint& at,
                   const QuadratureConfig& q);
long double moment_eval_ld(const MixtureDensity& d, const MomentSymbol& m, double alpha,
                           double t, const QuadratureConfig& q,
                           long double* rel_error = nullptr);

double entropy_eval(const MixtureDensity& d, EntropyKind kind, const EvalPoint& at,
                    const QuadratureConfig& q);
long double entropy_eval_ld(const MixtureDensity& d, EntropyKind kind, double alpha, double t,
                            const QuadratureConfig& q);

enum class EvalRoute { engine, spectral };

struct DerivativeValue {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Engine route: evaluates the symbolic k-th derivative term by term with
// moment_eval (times Z for Tsallis). Spectral route: degree-64 Chebyshev
// interpolation of the entropy on [t/2, 2t], noise-truncated, differentiated
// k times at t. Spectral throws SpectralIllConditioned for k > 9.
DerivativeValue derivative_eval(const MixtureDensity& d, EntropyKind kind, int k,
                                const EvalPoint& at, const QuadratureConfig& q,
                                EvalRoute route);

// Engine-route evaluation of an arbitrary moment expression (used by tests
// and by the scanner); `normalizer_power` multiplies by Z^power.
DerivativeValue evaluate_expr(const MixtureDensity& d, const MomentExpr& expr,
                              int normalizer_power, const EvalPoint& at,
                              const QuadratureConfig& q);

struct EntropyBoundsResult {
  double lower = 0.0;
  std::optional<double> upper;
};

// Gaussian lower bound (equality at sigma^2 -> 0) and the max-entropy upper
// bounds: Gaussian comparison for alpha > 1, Pearson type VII for
// 1/3 < alpha < 1, none otherwise.
EntropyBoundsResult entropy_bounds(double alpha, double t, double sigma2);

struct Tsallis2Check {
  double lhs = 0.0;  // d^k/dt^k Tsallis entropy of order 2
  double rhs = 0.0;  // (-1)^{k-1} int (d^k p/dx^k)^2 dx
};

Tsallis2Check tsallis2_identity_check(const MixtureDensity& d, int k, double t,
                                      const QuadratureConfig& q,
                                      EvalRoute route = EvalRoute::engine);

}  // namespace entropyflow
