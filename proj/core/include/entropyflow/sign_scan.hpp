#pragma once

#include <string>
#include <vector>

#include "entropyflow/numeric_eval.hpp"

namespace entropyflow {

struct SignViolation {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double worst_value = 0.0;   // most violating value seen in the bracket
  double worst_t = 0.0;
  double spectral_value = 0.0;
  bool spectral_checked = false;
};

struct ScanCell {
  int order = 0;
  double alpha = 0.0;
  std::vector<double> t_grid;
  std::vector<double> values;
  std::vector<double> error_estimates;
  std::vector<int> signs;
  std::vector<SignViolation> violations;
  std::string error;  // nonempty when evaluation failed; scan continues
};

struct SignScanReport {
  EntropyKind kind = EntropyKind::renyi;
  std::vector<ScanCell> cells;
};

struct ScanOptions {
  QuadratureConfig quad;
  int jobs = 1;
  // a violation requires |value| > violation_error_factor * error estimate
  double violation_error_factor = 10.0;
  double bracket_width = 1e-3;
  bool spectral_cross_check = true;
};

std::vector<double> make_t_grid(double t_min, double t_max, int points, bool log_spaced);

// Evaluates the engine-route k-th derivative over the grid for every
// (order, alpha) cell and records where the sign contradicts (-1)^{k-1};
// brackets are refined by bisection and cross-checked spectrally.
SignScanReport scan_signs(const MixtureDensity& d, EntropyKind kind,
                          const std::vector<int>& orders, const std::vector<double>& alphas,
                          const std::vector<double>& t_grid, const ScanOptions& opts = {});

}  // namespace entropyflow
