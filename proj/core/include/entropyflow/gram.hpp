#pragma once

#include <map>
#include <string>
#include <vector>

#include "entropyflow/heat_calculus.hpp"
#include "entropyflow/moment.hpp"
#include "entropyflow/poly_matrix.hpp"

namespace entropyflow {

// One entry of the quadratic-form vector z: a pointwise monomial in the
// ratios p_n/p times a (possibly empty) multiset of scalar moment
// multipliers, e.g. p1 * E[p1^2].
struct GramBasisElement {
  std::map<int, int> pointwise;
  std::vector<MomentSymbol> scalar_moments;

  int total_order() const;
  std::string to_string() const;
};

// Reference basis for the k-th derivative problem. Tsallis bases drop the
// scalar-moment-weighted entries. Throws UnsupportedOrderError outside 2..4.
std::vector<GramBasisElement> default_gram_basis(int k, EntropyKind kind);

// Default nonnegative slack products per (k, kind); empty for k=2
// and for Tsallis.
std::vector<MomentExpr> default_slack_spec(int k, EntropyKind kind);

// Variables of the matching problem: the n(n+1)/2 upper-triangular Gram
// entries followed by the slack coefficients.
struct GramVar {
  enum class Kind { entry, slack };
  Kind kind = Kind::entry;
  int i = 0;  // 1-based row (entry)
  int j = 0;  // 1-based col (entry)
  int slack = 0;

  std::string name() const;  // "g1_3" / "s0"
  bool operator==(const GramVar&) const = default;
};

// Coefficient-matching equation for one canonical moment product:
//   sum coeff_v(alpha) * x_v = rhs(alpha).
struct GramConstraint {
  std::vector<MomentSymbol> monomial;
  std::map<int, AlphaPoly> coeffs;  // var index -> coefficient
  AlphaPoly rhs;
  // Variable this constraint determines in the template view, -1 if none.
  int determined_var = -1;
};

struct GramProblem {
  std::vector<GramBasisElement> basis;
  MomentExpr bracket;  // target for E[z^T A z] + sum c_j * slack_j
  std::vector<MomentExpr> slack_exprs;
  std::vector<GramConstraint> constraints;

  int n() const { return static_cast<int>(basis.size()); }
  int num_entries() const { return n() * (n() + 1) / 2; }
  int num_slacks() const { return static_cast<int>(slack_exprs.size()); }
  int num_vars() const { return num_entries() + num_slacks(); }

  int entry_index(int i, int j) const;  // 1-based, i <= j
  GramVar var(int index) const;
  int var_index(const GramVar& v) const;
  int var_index_by_name(const std::string& name) const;

  // Variables not determined by any constraint (the template's free slots).
  std::vector<int> free_vars() const;
};

// Sign-normalized matching target for the k-th derivative:
// (-1)^{k-1} * (12/alpha) * expr, so the certificate proves
// (-1)^{k-1} d^k h / dt^k >= 0. Division by alpha is exact.
MomentExpr bracket_for_derivative(const DerivativeResult& d);

// Matching target for entropy-power concavity: -(1/alpha) * pc_expr.
MomentExpr bracket_for_concavity(const MomentExpr& pc_expr);

// Expands E[z_i z_j] through the rewriting engine and matches coefficients
// of every canonical moment product on either side. Unmatched monomials get
// zero right-hand sides. Throws OrderMismatchError when basis and target
// orders disagree.
GramProblem build_gram_problem(const MomentExpr& bracket,
                               std::vector<GramBasisElement> basis,
                               std::vector<MomentExpr> slack_exprs);

GramProblem build_gram_problem(const DerivativeResult& target,
                               std::vector<GramBasisElement> basis,
                               std::vector<MomentExpr> slack_exprs);

// Expansion of E[z_i z_j] as a canonical MomentExpr (exposed for tests).
MomentExpr expand_basis_product(const GramBasisElement& a, const GramBasisElement& b);

// Fitted rational-polynomial curves for the free variables.
struct FittedParams {
  std::map<std::string, AlphaPoly> values;  // keyed by GramVar::name()
  int fit_degree = 0;
  long round_denominator = 1;
};

struct AssembledGram {
  PolyMatrix matrix;
  std::vector<AlphaPoly> slack_values;
};

// Resolves every free variable from `params`, solves the dependent entries
// from the affine constraints symbolically, and verifies all constraints as
// exact AlphaPoly identities. Throws UnresolvedParameterError when the
// system cannot be completed or a residual is nonzero.
AssembledGram assemble_matrix(const GramProblem& problem, const FittedParams& params);

}  // namespace entropyflow
