#include "entropyflow/fitting.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <future>
#include <stdexcept>

namespace entropyflow {

AlphaPoly fit_rounded_polynomial(const std::vector<std::pair<double, double>>& points,
                                 int degree, long round_denominator) {
  if (static_cast<int>(points.size()) < degree + 1) {
    throw std::invalid_argument("need at least degree+1 points to fit");
  }
  const int m = static_cast<int>(points.size());
  Eigen::MatrixXd V(m, degree + 1);
  Eigen::VectorXd y(m);
  for (int r = 0; r < m; ++r) {
    double x = 1.0;
    for (int c = 0; c <= degree; ++c) {
      V(r, c) = x;
      x *= points[r].first;
    }
    y[r] = points[r].second;
  }
  Eigen::VectorXd coeffs = V.colPivHouseholderQr().solve(y);
  std::vector<Rational> rounded(degree + 1, make_rational(0));
  for (int c = 0; c <= degree; ++c) {
    rounded[c] = round_to_denominator(coeffs[c], round_denominator);
  }
  return AlphaPoly(std::move(rounded));
}

FittedParams sample_and_fit(const GramProblem& p, const std::vector<double>& alpha_grid,
                            int fit_degree, long round_denominator,
                            const SampleAndFitOptions& opts) {
  const std::vector<int> free_vars = p.free_vars();
  const int total_points = static_cast<int>(alpha_grid.size() + opts.pinned.size());
  if (total_points < fit_degree + 1) {
    throw std::invalid_argument("grid smaller than fit degree + 1");
  }

  std::vector<FeasiblePoint> solved(alpha_grid.size());
  auto solve_one = [&](size_t g) {
    SolveOutcome outcome = solve_feasibility(p, alpha_grid[g], opts.solve);
    if (!is_feasible(outcome)) {
      const auto& rep = std::get<InfeasibleReport>(outcome);
      throw InfeasibleGridPoint(alpha_grid[g], rep.violation);
    }
    solved[g] = std::get<FeasiblePoint>(std::move(outcome));
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || alpha_grid.size() <= 1) {
    for (size_t g = 0; g < alpha_grid.size(); ++g) solve_one(g);
  } else {
    std::vector<std::future<void>> futures;
    futures.reserve(alpha_grid.size());
    for (size_t g = 0; g < alpha_grid.size(); ++g) {
      futures.push_back(std::async(std::launch::async, solve_one, g));
    }
    for (auto& f : futures) f.get();  // rethrows InfeasibleGridPoint
  }

  FittedParams params;
  params.fit_degree = fit_degree;
  params.round_denominator = round_denominator;
  for (int var : free_vars) {
    const std::string name = p.var(var).name();
    std::vector<std::pair<double, double>> points;
    points.reserve(total_points);
    for (size_t g = 0; g < alpha_grid.size(); ++g) {
      points.emplace_back(alpha_grid[g], point_value(p, solved[g], var));
    }
    for (const auto& [alpha, values] : opts.pinned) {
      auto it = values.find(name);
      if (it == values.end()) {
        throw std::invalid_argument("pinned point missing value for " + name);
      }
      points.emplace_back(alpha, it->second);
    }
    std::sort(points.begin(), points.end());
    params.values[name] = fit_rounded_polynomial(points, fit_degree, round_denominator);
  }
  return params;
}

}  // namespace entropyflow
