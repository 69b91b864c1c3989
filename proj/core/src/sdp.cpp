#include "entropyflow/sdp.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "entropyflow/errors.hpp"

namespace entropyflow {

InstantiatedConstraints instantiate_constraints(const GramProblem& p, double alpha) {
  InstantiatedConstraints out;
  out.rows.reserve(p.constraints.size());
  out.rhs.reserve(p.constraints.size());
  for (const auto& c : p.constraints) {
    std::vector<double> row(p.num_vars(), 0.0);
    for (const auto& [idx, coeff] : c.coeffs) row[idx] = coeff.evaluate(alpha);
    out.rows.push_back(std::move(row));
    out.rhs.push_back(c.rhs.evaluate(alpha));
  }
  return out;
}

bool is_feasible(const SolveOutcome& o) { return std::holds_alternative<FeasiblePoint>(o); }

const FeasiblePoint& feasible_point(const SolveOutcome& o) {
  return std::get<FeasiblePoint>(o);
}

double point_value(const GramProblem& p, const FeasiblePoint& pt, int var_index) {
  const GramVar v = p.var(var_index);
  if (v.kind == GramVar::Kind::slack) return pt.slacks[v.slack];
  return pt.gram[(v.i - 1) * p.n() + (v.j - 1)];
}

namespace {

struct Workspace {
  int n = 0;
  int num_entries = 0;
  int num_vars = 0;
  Eigen::MatrixXd A;      // m x N constraint matrix
  Eigen::VectorXd b;      // m
  Eigen::VectorXd winv;   // N, inverse metric weights
  Eigen::MatrixXd AWAt;   // m x m
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> factor;

  Eigen::MatrixXd to_matrix(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd S(n, n);
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        S(i, j) = x[idx];
        S(j, i) = x[idx];
        ++idx;
      }
    }
    return S;
  }

  void from_matrix(const Eigen::MatrixXd& S, Eigen::VectorXd& x) const {
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        x[idx] = 0.5 * (S(i, j) + S(j, i));
        ++idx;
      }
    }
  }

  Eigen::VectorXd project_affine(const Eigen::VectorXd& x) const {
    Eigen::VectorXd residual = A * x - b;
    Eigen::VectorXd lambda = factor.solve(residual);
    return x - winv.asDiagonal() * (A.transpose() * lambda);
  }

  // Projection onto {mat(x) - shift*I psd, slacks >= 0} in the weighted
  // (Frobenius-compatible) metric.
  Eigen::VectorXd project_cone(const Eigen::VectorXd& x, double shift) const {
    Eigen::VectorXd out = x;
    Eigen::MatrixXd S = to_matrix(x.head(num_entries));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S);
    Eigen::VectorXd ev = eig.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) ev[i] = std::max(ev[i], shift);
    Eigen::MatrixXd clamped =
        eig.eigenvectors() * ev.asDiagonal() * eig.eigenvectors().transpose();
    Eigen::VectorXd head(num_entries);
    from_matrix(clamped, head);
    out.head(num_entries) = head;
    for (int i = num_entries; i < num_vars; ++i) out[i] = std::max(out[i], 0.0);
    return out;
  }

  double weighted_norm(const Eigen::VectorXd& v) const {
    double acc = 0.0;
    for (int i = 0; i < num_vars; ++i) acc += v[i] * v[i] / winv[i];
    return std::sqrt(acc);
  }
};

Workspace make_workspace(const GramProblem& p, double alpha) {
  Workspace w;
  w.n = p.n();
  w.num_entries = p.num_entries();
  w.num_vars = p.num_vars();
  const auto inst = instantiate_constraints(p, alpha);
  const int m = static_cast<int>(inst.rows.size());
  w.A.resize(m, w.num_vars);
  w.b.resize(m);
  for (int r = 0; r < m; ++r) {
    double scale = std::abs(inst.rhs[r]);
    for (double v : inst.rows[r]) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) scale = 1.0;
    for (int c = 0; c < w.num_vars; ++c) w.A(r, c) = inst.rows[r][c] / scale;
    w.b[r] = inst.rhs[r] / scale;
  }
  w.winv.resize(w.num_vars);
  int idx = 0;
  for (int i = 0; i < w.n; ++i) {
    for (int j = i; j < w.n; ++j) {
      w.winv[idx++] = (i == j) ? 1.0 : 0.5;  // metric weight 2 on off-diagonals
    }
  }
  for (int s = 0; s < p.num_slacks(); ++s) w.winv[idx++] = 1.0;
  w.AWAt = w.A * w.winv.asDiagonal() * w.A.transpose();
  w.factor.compute(w.AWAt);
  return w;
}

struct ProbeResult {
  bool feasible = false;
  bool decided = true;
  double gap = 0.0;
  Eigen::VectorXd point;  // affine-projected iterate
};

ProbeResult dykstra_probe(const Workspace& w, double shift, Eigen::VectorXd start,
                          const SolveOptions& opts) {
  Eigen::VectorXd x = w.project_affine(std::move(start));
  Eigen::VectorXd p_inc = Eigen::VectorXd::Zero(w.num_vars);
  Eigen::VectorXd q_inc = Eigen::VectorXd::Zero(w.num_vars);
  const int check_every = 250;
  double prev_gap = std::numeric_limits<double>::infinity();
  int stagnant = 0;
  ProbeResult res;
  for (int it = 0; it < opts.max_iterations; ++it) {
    Eigen::VectorXd y = w.project_cone(x + p_inc, shift);
    p_inc = x + p_inc - y;
    Eigen::VectorXd z = w.project_affine(y + q_inc);
    q_inc = y + q_inc - z;
    x = z;
    if (it % check_every == check_every - 1) {
      const double gap = w.weighted_norm(x - y);
      if (gap < opts.constraint_tol) {
        // report the cone-projected point: psd shift and slack nonnegativity
        // hold exactly there, the affine residual is bounded by the gap
        res.feasible = true;
        res.gap = gap;
        res.point = y;
        return res;
      }
      // plateaued gap well above tolerance -> the sets do not intersect
      if (gap > 1e3 * opts.constraint_tol && gap > prev_gap * (1.0 - 1e-4)) {
        if (++stagnant >= 8) {
          res.feasible = false;
          res.gap = gap;
          res.point = x;
          return res;
        }
      } else {
        stagnant = 0;
      }
      prev_gap = gap;
    }
  }
  // Iteration cap: still shrinking but slow. Treat a tiny gap as feasible,
  // a clearly positive one as infeasible, otherwise undecided.
  const Eigen::VectorXd cone_pt = w.project_cone(x, shift);
  const double gap = w.weighted_norm(x - cone_pt);
  res.gap = gap;
  if (gap < 10 * opts.constraint_tol) {
    res.feasible = true;
    res.point = cone_pt;
  } else if (gap > 1e4 * opts.constraint_tol) {
    res.feasible = false;
    res.point = x;
  } else {
    res.decided = false;
    res.point = x;
  }
  return res;
}

FeasiblePoint extract_point(const GramProblem& p, const Workspace& w,
                            const Eigen::VectorXd& x) {
  FeasiblePoint pt;
  Eigen::MatrixXd S = w.to_matrix(x.head(w.num_entries));
  pt.gram.assign(S.data(), S.data() + S.size());
  // Eigen stores column-major; symmetric, so row-major view is identical.
  pt.slacks.resize(p.num_slacks());
  for (int s = 0; s < p.num_slacks(); ++s) pt.slacks[s] = x[w.num_entries + s];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S);
  pt.margin = eig.eigenvalues().minCoeff();
  pt.constraint_residual = (w.A * x - w.b).cwiseAbs().maxCoeff();
  return pt;
}

}  // namespace

namespace {

// Facial reduction for tangential intersections (no Slater point): any PSD
// matrix with a forced zero eigendirection v satisfies S v = 0, which is
// affine in the entries. Pinning the face restores fast convergence. Only a
// feasible face-restricted probe is conclusive; an infeasible one proves
// nothing about the original problem.
Workspace face_restricted(const Workspace& w, const Eigen::VectorXd& x,
                          double face_tol) {
  Eigen::MatrixXd S = w.to_matrix(x.head(w.num_entries));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S);
  const double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<Eigen::VectorXd> null_dirs;
  for (int i = 0; i < w.n; ++i) {
    if (std::abs(eig.eigenvalues()[i]) < face_tol * scale) {
      Eigen::VectorXd v = eig.eigenvectors().col(i);
      // the degenerate faces arising here are whole zero rows, so only pin
      // directions that are clearly axis-aligned; anything else risks cutting
      // into the feasible set
      int axis = 0;
      v.cwiseAbs().maxCoeff(&axis);
      if (std::abs(v[axis]) < 0.98 * v.norm()) continue;
      v.setZero();
      v[axis] = 1.0;
      null_dirs.push_back(std::move(v));
    }
  }
  Workspace out = w;
  if (null_dirs.empty()) return out;
  const int extra = static_cast<int>(null_dirs.size()) * w.n;
  const int m0 = static_cast<int>(w.A.rows());
  out.A.conservativeResize(m0 + extra, Eigen::NoChange);
  out.b.conservativeResize(m0 + extra);
  int row = m0;
  for (const auto& v : null_dirs) {
    for (int r = 0; r < w.n; ++r) {
      Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(w.num_vars);
      // (S v)_r = sum_c x_{rc} v_c with x the symmetric entry variables
      int idx = 0;
      for (int i = 0; i < w.n; ++i) {
        for (int j = i; j < w.n; ++j) {
          if (i == r) coeffs[idx] += v[j];
          if (j == r && i != r) coeffs[idx] += v[i];
          ++idx;
        }
      }
      out.A.row(row) = coeffs.transpose();
      out.b[row] = 0.0;
      ++row;
    }
  }
  out.AWAt = out.A * out.winv.asDiagonal() * out.A.transpose();
  out.factor.compute(out.AWAt);
  return out;
}

}  // namespace

SolveOutcome solve_feasibility(const GramProblem& p, double alpha, const SolveOptions& opts) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  Workspace w = make_workspace(p, alpha);

  Eigen::VectorXd start = Eigen::VectorXd::Zero(w.num_vars);
  ProbeResult base = dykstra_probe(w, 0.0, start, opts);
  if (!base.feasible && base.gap < 1e-2) {
    // small stalled gap: possibly a tangential but nonempty intersection
    Workspace face = face_restricted(w, base.point, 1e-3);
    ProbeResult retry = dykstra_probe(face, 0.0, base.point, opts);
    if (retry.feasible) return extract_point(p, face, retry.point);
  }
  if (!base.decided) {
    throw NumericalFailure("projection iteration undecided at alpha=" + std::to_string(alpha));
  }
  if (!base.feasible) {
    InfeasibleReport rep;
    rep.best = extract_point(p, w, base.point);
    rep.violation = base.gap;
    return rep;
  }
  if (!opts.maximize_margin) return extract_point(p, w, base.point);

  // Bisect the largest shift with {A - shift*I psd} feasible; warm-start each
  // probe from the last feasible iterate.
  double lo = 0.0;
  Eigen::VectorXd best_point = base.point;
  FeasiblePoint base_pt = extract_point(p, w, base.point);
  double hi = std::max(opts.margin_resolution * 4, base_pt.margin * 2 + 1e-3);
  for (int expand = 0; expand < 20; ++expand) {
    ProbeResult r = dykstra_probe(w, hi, best_point, opts);
    if (r.feasible) {
      lo = hi;
      best_point = r.point;
      hi *= 2;
    } else {
      break;
    }
  }
  while (hi - lo > opts.margin_resolution) {
    const double midpoint = 0.5 * (lo + hi);
    ProbeResult r = dykstra_probe(w, midpoint, best_point, opts);
    if (r.feasible && r.decided) {
      lo = midpoint;
      best_point = r.point;
    } else {
      hi = midpoint;
    }
  }
  return extract_point(p, w, best_point);
}

SolveOutcome solve_feasibility(const GramProblem& p, const Rational& alpha,
                               const SolveOptions& opts) {
  return solve_feasibility(p, rational_to_double(alpha), opts);
}

}  // namespace entropyflow
