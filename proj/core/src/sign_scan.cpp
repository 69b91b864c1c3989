#include "entropyflow/sign_scan.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

namespace entropyflow {

std::vector<double> make_t_grid(double t_min, double t_max, int points, bool log_spaced) {
  if (!(t_min > 0.0) || !(t_max > t_min) || points < 2) {
    throw std::invalid_argument("bad t grid parameters");
  }
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / (points - 1);
    grid[i] = log_spaced ? t_min * std::pow(t_max / t_min, s)
                         : t_min + (t_max - t_min) * s;
  }
  return grid;
}

namespace {

struct CellEval {
  double value;
  double error;
};

bool violates(int expected_sign, double value, double error, double factor) {
  if (expected_sign > 0) return value < -factor * error;
  return value > factor * error;
}

}  // namespace

SignScanReport scan_signs(const MixtureDensity& d, EntropyKind kind,
                          const std::vector<int>& orders, const std::vector<double>& alphas,
                          const std::vector<double>& t_grid, const ScanOptions& opts) {
  if (!std::is_sorted(t_grid.begin(), t_grid.end()) || t_grid.empty() || t_grid.front() <= 0) {
    throw std::invalid_argument("t grid must be sorted and positive");
  }
  SignScanReport report;
  report.kind = kind;

  for (int k : orders) {
    for (double alpha : alphas) {
      ScanCell cell;
      cell.order = k;
      cell.alpha = alpha;
      cell.t_grid = t_grid;
      const int expected_sign = (k % 2 == 1) ? 1 : -1;
      const int n = static_cast<int>(t_grid.size());
      cell.values.assign(n, 0.0);
      cell.error_estimates.assign(n, 0.0);
      cell.signs.assign(n, 0);

      auto eval_at = [&](double t) -> CellEval {
        const DerivativeValue v =
            derivative_eval(d, kind, k, EvalPoint(alpha, t), opts.quad, EvalRoute::engine);
        return {v.value, v.error_estimate};
      };

      try {
        const int jobs = std::max(1, opts.jobs);
        if (jobs == 1) {
          for (int i = 0; i < n; ++i) {
            const CellEval e = eval_at(t_grid[i]);
            cell.values[i] = e.value;
            cell.error_estimates[i] = e.error;
          }
        } else {
          std::vector<std::future<CellEval>> futures(n);
          for (int i = 0; i < n; ++i) {
            futures[i] = std::async(std::launch::async, eval_at, t_grid[i]);
          }
          for (int i = 0; i < n; ++i) {
            const CellEval e = futures[i].get();
            cell.values[i] = e.value;
            cell.error_estimates[i] = e.error;
          }
        }
        for (int i = 0; i < n; ++i) {
          cell.signs[i] = cell.values[i] > 0 ? 1 : (cell.values[i] < 0 ? -1 : 0);
        }

        // group consecutive violating grid points into brackets
        int i = 0;
        while (i < n) {
          if (!violates(expected_sign, cell.values[i], cell.error_estimates[i],
                        opts.violation_error_factor)) {
            ++i;
            continue;
          }
          int j = i;
          while (j + 1 < n && violates(expected_sign, cell.values[j + 1],
                                       cell.error_estimates[j + 1],
                                       opts.violation_error_factor)) {
            ++j;
          }
          SignViolation v;
          v.t_lo = t_grid[i];
          v.t_hi = t_grid[j];
          int worst = i;
          for (int m = i; m <= j; ++m) {
            if (std::abs(cell.values[m]) > std::abs(cell.values[worst])) worst = m;
          }
          v.worst_value = cell.values[worst];
          v.worst_t = t_grid[worst];

          // refine the bracket edges toward the sign transitions
          auto refine = [&](double good_t, double bad_t) {
            for (int step = 0; step < 64 && std::abs(bad_t - good_t) > opts.bracket_width;
                 ++step) {
              const double mid = 0.5 * (good_t + bad_t);
              const CellEval e = eval_at(mid);
              if (violates(expected_sign, e.value, e.error, opts.violation_error_factor)) {
                bad_t = mid;
              } else {
                good_t = mid;
              }
            }
            return bad_t;
          };
          if (i > 0) v.t_lo = refine(t_grid[i - 1], t_grid[i]);
          if (j + 1 < n) {
            // mirror: approach from the right neighbor
            double good_t = t_grid[j + 1], bad_t = t_grid[j];
            for (int step = 0; step < 64 && std::abs(good_t - bad_t) > opts.bracket_width;
                 ++step) {
              const double mid = 0.5 * (good_t + bad_t);
              const CellEval e = eval_at(mid);
              if (violates(expected_sign, e.value, e.error, opts.violation_error_factor)) {
                bad_t = mid;
              } else {
                good_t = mid;
              }
            }
            v.t_hi = bad_t;
          }
          if (opts.spectral_cross_check && k <= 9) {
            try {
              v.spectral_value = derivative_eval(d, kind, k, EvalPoint(alpha, v.worst_t),
                                                 opts.quad, EvalRoute::spectral)
                                     .value;
              v.spectral_checked = true;
            } catch (const SpectralIllConditioned&) {
              v.spectral_checked = false;
            }
          }
          cell.violations.push_back(v);
          i = j + 1;
        }
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace entropyflow
