#pragma once

#include <string>
#include <vector>

#include "entropyflow/heat_calculus.hpp"

namespace entropyflow {

// One exact symbolic identity: an engine-computed expression against its
// hand-transcribed expected form, compared as exact AlphaPoly equalities.
struct IdentityCheck {
  std::string group;
  std::string name;
  MomentExpr computed;
  MomentExpr expected;
  bool pass = false;
};

// The reduction and time-derivative identity suite:
//  - 6 reductions behind the first-derivative bookkeeping (incl. the two
//    time derivatives d/dt int p^{a-2} p1^2 and d/dt int p^a),
//  - 8 + 2 third-derivative reductions and time derivatives,
//  - 9 + 4 fourth-derivative reductions and time derivatives,
//  - 8 normalized moment time-derivative lines,
//  - the entropy derivative formulas (Renyi k=1..4, Tsallis k=4).
std::vector<IdentityCheck> run_identity_suite();

// Expected entropy-derivative expressions (exposed for tests).
MomentExpr expected_renyi_derivative(int k);  // k = 1..4
MomentExpr expected_tsallis4_derivative();

}  // namespace entropyflow
