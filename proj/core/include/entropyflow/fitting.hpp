#pragma once

#include <map>
#include <string>
#include <vector>

#include "entropyflow/gram.hpp"
#include "entropyflow/sdp.hpp"

namespace entropyflow {

// Least-squares polynomial fit of the given degree, each coefficient then
// rounded to the nearest rational with the given denominator.
AlphaPoly fit_rounded_polynomial(const std::vector<std::pair<double, double>>& points,
                                 int degree, long round_denominator);

struct SampleAndFitOptions {
  SolveOptions solve;
  // Extra data points appended to the fit without solving, e.g. the exact
  // alpha = 2 endpoint of the Tsallis k=4 family: alpha -> (var name -> value).
  std::vector<std::pair<double, std::map<std::string, double>>> pinned;
  int jobs = 1;
};

// Solves the feasibility problem at every grid point, fits each free
// variable's solved values as a rounded rational polynomial. Infeasible grid
// points propagate as InfeasibleGridPoint.
FittedParams sample_and_fit(const GramProblem& p, const std::vector<double>& alpha_grid,
                            int fit_degree, long round_denominator,
                            const SampleAndFitOptions& opts = {});

struct InfeasibleGridPoint : std::runtime_error {
  double alpha;
  double violation;
  InfeasibleGridPoint(double a, double v)
      : std::runtime_error("feasibility failed at alpha=" + std::to_string(a)),
        alpha(a),
        violation(v) {}
};

}  // namespace entropyflow
