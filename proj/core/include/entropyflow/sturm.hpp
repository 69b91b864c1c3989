#pragma once

#include <utility>
#include <vector>

#include "entropyflow/alpha_poly.hpp"

namespace entropyflow {

// Exact count of distinct real roots of p in the open interval (lo, hi) via
// the Sturm chain of the square-free part. Requires p nonzero and
// p(lo) != 0, p(hi) != 0; throws EndpointRootError otherwise.
int sturm_root_count(const AlphaPoly& p, const Rational& lo, const Rational& hi);

// Exact count of distinct real roots on the whole line.
int sturm_total_roots(const AlphaPoly& p);

// Shrinks (lo, hi), known to contain exactly one root, by bisection until
// hi - lo <= width. Endpoints stay rational and non-roots.
std::pair<Rational, Rational> refine_root_interval(const AlphaPoly& p, Rational lo, Rational hi,
                                                   const Rational& width);

// A bound B with all real roots of p inside (-B, B) (Cauchy bound).
Rational root_bound(const AlphaPoly& p);

// Square-free part p / gcd(p, p'), primitive integer coefficients.
AlphaPoly square_free_part(const AlphaPoly& p);

}  // namespace entropyflow
