#pragma once

#include <functional>

#include "entropyflow/errors.hpp"

namespace entropyflow {

struct QuadratureConfig {
  double truncation_radius = 12.0;  // domain [min c - R*sigma_max, max c + R*sigma_max]
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  int max_subdivisions = 20000;

  void validate() const;
};

struct QuadratureResult {
  long double value = 0.0L;
  long double error = 0.0L;
};

// Adaptive Gauss quadrature on [a, b]: 15-point Gauss-Legendre panels with a
// 7-point companion rule for the local error estimate, worst panel split
// first. `initial_panels` guards against narrow features slipping between
// the nodes of a single wide panel. Throws QuadratureNonConvergence when the
// subdivision budget runs out far from tolerance.
QuadratureResult integrate_adaptive(const std::function<long double(long double)>& f,
                                    long double a, long double b, long double abs_tol,
                                    long double rel_tol, int max_subdivisions,
                                    int initial_panels = 8);

}  // namespace entropyflow
