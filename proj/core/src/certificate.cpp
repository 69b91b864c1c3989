#include "entropyflow/certificate.hpp"

#include <algorithm>

#include "entropyflow/errors.hpp"

namespace entropyflow {

std::string cert_verdict_name(CertVerdict v) {
  switch (v) {
    case CertVerdict::positive_definite: return "positive-definite";
    case CertVerdict::positive_semidefinite_at_endpoint:
      return "positive-semidefinite-at-endpoint";
    case CertVerdict::failed: return "failed";
  }
  return "?";
}

namespace {

const Rational kPerturb = make_rational(1, 1000000);

struct EvidenceResult {
  PolyEvidence evidence;
  bool ok = false;
};

EvidenceResult check_poly(const AlphaPoly& p, Rational lo, Rational hi, bool allow_zero) {
  EvidenceResult r;
  r.evidence.poly = p;
  if (p.is_zero()) {
    // identically zero slack: trivially nonnegative
    r.evidence.roots_in_interval = 0;
    r.evidence.midpoint_sign = 0;
    r.ok = allow_zero;
    return r;
  }
  bool perturbed = false;
  int guard = 0;
  while (p.evaluate(lo) == 0 && guard++ < 4) {
    lo += kPerturb;
    perturbed = true;
  }
  guard = 0;
  while (p.evaluate(hi) == 0 && guard++ < 4) {
    hi -= kPerturb;
    perturbed = true;
  }
  if (lo >= hi || p.evaluate(lo) == 0 || p.evaluate(hi) == 0) {
    r.ok = false;
    return r;
  }
  r.evidence.endpoint_perturbed = perturbed;
  r.evidence.roots_in_interval = sturm_root_count(p, lo, hi);
  const Rational mid = (lo + hi) / 2;
  r.evidence.midpoint_sign = sign_of(p.evaluate(mid));
  r.ok = (r.evidence.roots_in_interval == 0 && r.evidence.midpoint_sign > 0);
  return r;
}

bool interval_certifies(const std::vector<AlphaPoly>& minors,
                        const std::vector<AlphaPoly>& slacks, const Rational& lo,
                        const Rational& hi) {
  for (const auto& m : minors) {
    if (!check_poly(m, lo, hi, false).ok) return false;
  }
  for (const auto& s : slacks) {
    if (!check_poly(s, lo, hi, true).ok) return false;
  }
  return true;
}

std::optional<std::pair<Rational, Rational>> widest_certified(
    const std::vector<AlphaPoly>& minors, const std::vector<AlphaPoly>& slacks, Rational lo,
    Rational hi, int depth) {
  if (interval_certifies(minors, slacks, lo, hi)) return std::make_pair(lo, hi);
  if (depth <= 0) return std::nullopt;
  const Rational mid = (lo + hi) / 2;
  auto left = widest_certified(minors, slacks, lo, mid, depth - 1);
  auto right = widest_certified(minors, slacks, mid, hi, depth - 1);
  if (!left) return right;
  if (!right) return left;
  return (left->second - left->first) >= (right->second - right->first) ? left : right;
}

}  // namespace

std::optional<std::vector<int>> psd_at_point(const PolyMatrix& m, const Rational& alpha) {
  const int n = m.size();
  std::vector<int> zero_rows;
  std::vector<int> keep;
  std::vector<Rational> values = m.evaluate(alpha);
  auto at = [&](int i, int j) -> const Rational& { return values[i * n + j]; };
  for (int i = 0; i < n; ++i) {
    bool all_zero = true;
    for (int j = 0; j < n; ++j) {
      if (at(i, j) != 0) {
        all_zero = false;
        break;
      }
    }
    (all_zero ? zero_rows : keep).push_back(i);
  }
  const int kn = static_cast<int>(keep.size());
  PolyMatrix block(kn);
  for (int i = 0; i < kn; ++i) {
    for (int j = i; j < kn; ++j) {
      block.set(i, j, AlphaPoly(at(keep[i], keep[j])));
    }
  }
  for (const auto& minor : principal_minors(block)) {
    const Rational v = minor.evaluate(alpha);
    if (v <= 0) return std::nullopt;
  }
  return zero_rows;
}

PositivityCertificate certify_interval(const PolyMatrix& m,
                                       const std::vector<AlphaPoly>& slacks,
                                       const Rational& lo, const Rational& hi,
                                       const CertifyOptions& opts) {
  PositivityCertificate cert;
  cert.lo = lo;
  cert.hi = hi;
  const std::vector<AlphaPoly> minors = principal_minors(m);

  bool all_ok = true;
  for (const auto& minor : minors) {
    auto r = check_poly(minor, lo, hi, false);
    all_ok = all_ok && r.ok;
    cert.minors.push_back(std::move(r.evidence));
  }
  for (const auto& s : slacks) {
    auto r = check_poly(s, lo, hi, true);
    all_ok = all_ok && r.ok;
    cert.slacks.push_back(std::move(r.evidence));
  }

  if (!all_ok) {
    cert.verdict = CertVerdict::failed;
    cert.certified_subinterval =
        widest_certified(minors, slacks, lo, hi, opts.max_bisection_depth);
    return cert;
  }

  cert.verdict = CertVerdict::positive_definite;
  for (const Rational& endpoint : {lo, hi}) {
    const bool requested = (endpoint == lo) ? opts.closed_lo : opts.closed_hi;
    if (!requested) continue;
    auto zero_rows = psd_at_point(m, endpoint);
    if (!zero_rows) {
      cert.verdict = CertVerdict::failed;
      cert.certified_subinterval = std::make_pair(lo, hi);
      return cert;
    }
    if (!zero_rows->empty()) {
      cert.verdict = CertVerdict::positive_semidefinite_at_endpoint;
      cert.endpoint_zero_rows = *zero_rows;
      cert.endpoint = endpoint;
    }
  }
  return cert;
}

}  // namespace entropyflow
