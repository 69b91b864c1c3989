#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "entropyflow/gram.hpp"

namespace entropyflow {

// Numeric instantiation of the matching constraints at a fixed alpha:
// rows * x = rhs over x = (upper-triangular Gram entries, slacks).
struct InstantiatedConstraints {
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
};

InstantiatedConstraints instantiate_constraints(const GramProblem& p, double alpha);

struct FeasiblePoint {
  std::vector<double> gram;    // n x n row-major, symmetric
  std::vector<double> slacks;
  double margin = 0.0;              // smallest eigenvalue of gram
  double constraint_residual = 0.0; // max |row.x - rhs|
};

struct InfeasibleReport {
  FeasiblePoint best;    // most-feasible point reached
  double violation = 0.0;  // residual distance between affine set and cone
};

using SolveOutcome = std::variant<FeasiblePoint, InfeasibleReport>;

struct SolveOptions {
  double constraint_tol = 1e-10;
  double margin_resolution = 1e-5;  // bisection resolution when maximizing margin
  int max_iterations = 300000;      // projection iterations per feasibility probe
  bool maximize_margin = true;
};

// Alternating-projection (Dykstra) feasibility between the affine matching
// constraints and {A - lambda*I psd, slacks >= 0}, with bisection on lambda
// to maximize the margin. Throws NumericalFailure when neither convergence
// nor a stable infeasibility gap is reached within the iteration cap.
SolveOutcome solve_feasibility(const GramProblem& p, double alpha, const SolveOptions& opts = {});
SolveOutcome solve_feasibility(const GramProblem& p, const Rational& alpha,
                               const SolveOptions& opts = {});

bool is_feasible(const SolveOutcome& o);
const FeasiblePoint& feasible_point(const SolveOutcome& o);

// Numeric value of one variable in a solved point.
double point_value(const GramProblem& p, const FeasiblePoint& pt, int var_index);

}  // namespace entropyflow
