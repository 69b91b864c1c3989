#pragma once

#include <string>

#include "entropyflow/moment.hpp"
#include "entropyflow/raw_integral.hpp"

namespace entropyflow {

enum class EntropyKind { renyi, tsallis, shannon };

std::string entropy_kind_name(EntropyKind k);
EntropyKind entropy_kind_from_name(const std::string& name);

// k-th t-derivative of the chosen entropy along p_t = p_2/2, expressed in
// canonical tilted moments. Tsallis results carry an implicit factor
// Z = int p^alpha to the power normalizer_power (1); Renyi/Shannon carry 0.
struct DerivativeResult {
  EntropyKind kind = EntropyKind::renyi;
  int order = 1;
  MomentExpr expr;
  int normalizer_power = 0;
};

// Rewrites r/Z into canonical moments by repeated integration by parts.
// Terminates because every rewrite strictly lowers the top derivative order;
// boundary terms vanish on (0, t_alpha).
MomentExpr reduce_raw_integral(const RawIntegral& r);

// d/dt of the raw integral itself (not divided by Z), product-free.
MomentExpr ddt_raw_integral(const RawIntegral& r);

// d/dt of the raw integral behind a canonical symbol.
MomentExpr ddt_moment_raw(const MomentSymbol& m);

// d/dt E_a[m]: the raw derivative plus the quotient-rule term against Z.
MomentExpr ddt_moment(const MomentSymbol& m);

// Linear extension of ddt_moment by the product rule over symbol multisets.
MomentExpr ddt_expr(const MomentExpr& e);

// Derivative order cap; the canonical basis at order 2k grows quickly.
inline constexpr int kDefaultDerivativeOrderCap = 12;

DerivativeResult entropy_derivative(EntropyKind kind, int k,
                                    int order_cap = kDefaultDerivativeOrderCap);

// Sign target h'' + 2*beta*(h')^2 for concavity of the entropy power
// N_alpha^beta = exp(2*beta*h_alpha).
MomentExpr power_concavity_expr(const AlphaPoly& beta);

}  // namespace entropyflow
