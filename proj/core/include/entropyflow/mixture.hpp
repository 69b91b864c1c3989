#pragma once

#include <vector>

#include "entropyflow/errors.hpp"

namespace entropyflow {

// Gaussian mixture evolving under the heat flow: component j at time t is
// N(center_j, initial_variance_j + t). Zero initial variances encode point
// masses (Example-style inputs); those require t > 0 strictly.
class MixtureDensity {
 public:
  MixtureDensity(std::vector<double> weights, std::vector<double> centers,
                 std::vector<double> initial_variances);

  int components() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& centers() const { return centers_; }
  const std::vector<double>& initial_variances() const { return initial_variances_; }

  double min_center() const;
  double max_center() const;
  double max_initial_variance() const;
  double min_initial_variance() const;

  // Variance of the mixture itself (at t = 0).
  double variance() const;

  // Closed-form d^n p / dx^n via the Hermite recursion per component.
  // out[0..n] receive p, p_1, ..., p_n. Stable in the tails (max-exponent
  // factoring).
  void derivatives(long double x, long double t, int n, long double* out) const;

  double density_derivative(double x, double t, int n) const;

  // p(x,t) plus the ratios pbar[i] = p_i / p for i = 1..n; the ratios stay
  // finite far into the tails where p itself underflows double.
  long double density_and_ratios(long double x, long double t, int n, long double* pbar) const;

 private:
  std::vector<double> weights_;
  std::vector<double> centers_;
  std::vector<double> initial_variances_;
};

}  // namespace entropyflow
