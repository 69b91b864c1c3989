#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entropyflow/poly_matrix.hpp"
#include "entropyflow/sturm.hpp"

namespace entropyflow {

enum class CertVerdict { positive_definite, positive_semidefinite_at_endpoint, failed };

std::string cert_verdict_name(CertVerdict v);

// Exact evidence that one polynomial stays positive (or is identically zero,
// for slacks) on the open interval: no roots inside, positive midpoint sign.
struct PolyEvidence {
  AlphaPoly poly;
  int roots_in_interval = 0;
  int midpoint_sign = 0;
  bool endpoint_perturbed = false;  // endpoints nudged by 1e-6 off a root
};

struct PositivityCertificate {
  Rational lo;
  Rational hi;
  std::vector<PolyEvidence> minors;
  std::vector<PolyEvidence> slacks;
  CertVerdict verdict = CertVerdict::failed;
  // Widest certified subinterval found by bisection when verdict == failed.
  std::optional<std::pair<Rational, Rational>> certified_subinterval;
  // Present when a closed endpoint was checked and the matrix is exactly
  // positive semidefinite there with a zero row/column pattern.
  std::vector<int> endpoint_zero_rows;
  std::optional<Rational> endpoint;
};

struct CertifyOptions {
  bool closed_lo = false;  // also certify the matrix at alpha = lo exactly
  bool closed_hi = false;
  int max_bisection_depth = 12;
};

// Certifies positive definiteness of the fitted matrix family on the open
// alpha-interval: every leading principal minor has no roots inside and a
// positive midpoint value, and every slack polynomial is nonnegative there
// (zero polynomials allowed). All arithmetic exact.
PositivityCertificate certify_interval(const PolyMatrix& m,
                                       const std::vector<AlphaPoly>& slacks,
                                       const Rational& lo, const Rational& hi,
                                       const CertifyOptions& opts = {});

// Exact PSD check of m evaluated at a rational point: zero rows/columns are
// stripped and the remaining block must have positive leading minors.
// Returns the zero row indices on success, nullopt when not PSD this way.
std::optional<std::vector<int>> psd_at_point(const PolyMatrix& m, const Rational& alpha);

}  // namespace entropyflow
