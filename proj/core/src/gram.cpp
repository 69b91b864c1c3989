#include "entropyflow/gram.hpp"

#include <algorithm>
#include <sstream>

#include "entropyflow/errors.hpp"
#include "entropyflow/raw_integral.hpp"

namespace entropyflow {

int GramBasisElement::total_order() const {
  int d = 0;
  for (const auto& [order, exp] : pointwise) d += order * exp;
  for (const auto& m : scalar_moments) d += m.total_order();
  return d;
}

std::string GramBasisElement::to_string() const {
  std::ostringstream os;
  if (pointwise.empty()) os << "1";
  bool first = true;
  for (const auto& [order, exp] : pointwise) {
    if (!first) os << " ";
    first = false;
    os << "p" << order;
    if (exp > 1) os << "^" << exp;
  }
  for (const auto& m : scalar_moments) os << "*" << m.to_string();
  return os.str();
}

namespace {

MomentSymbol sym(std::map<int, int> f) { return MomentSymbol::unchecked(std::move(f)); }

GramBasisElement pointwise_elem(std::map<int, int> f) {
  return GramBasisElement{std::move(f), {}};
}

GramBasisElement scalar_elem(std::map<int, int> pointwise, std::vector<MomentSymbol> scalars) {
  return GramBasisElement{std::move(pointwise), std::move(scalars)};
}

}  // namespace

std::vector<GramBasisElement> default_gram_basis(int k, EntropyKind kind) {
  if (k < 2 || k > 4) {
    throw UnsupportedOrderError("no default Gram basis for derivative order " +
                                std::to_string(k));
  }
  const bool tsallis = (kind == EntropyKind::tsallis);
  const MomentSymbol e2 = sym({{1, 2}});
  switch (k) {
    case 2: {
      std::vector<GramBasisElement> b = {pointwise_elem({{2, 1}}), pointwise_elem({{1, 2}})};
      if (!tsallis) b.push_back(scalar_elem({}, {e2}));
      return b;
    }
    case 3: {
      std::vector<GramBasisElement> b = {pointwise_elem({{3, 1}}),
                                         pointwise_elem({{1, 1}, {2, 1}}),
                                         pointwise_elem({{1, 3}})};
      if (!tsallis) b.push_back(scalar_elem({{1, 1}}, {e2}));
      return b;
    }
    default: {
      std::vector<GramBasisElement> b = {pointwise_elem({{4, 1}}),
                                         pointwise_elem({{1, 1}, {3, 1}}),
                                         pointwise_elem({{2, 2}}),
                                         pointwise_elem({{1, 2}, {2, 1}}),
                                         pointwise_elem({{1, 4}})};
      if (!tsallis) {
        b.push_back(scalar_elem({}, {sym({{1, 4}})}));
        b.push_back(scalar_elem({{2, 1}}, {e2}));
        b.push_back(scalar_elem({}, {sym({{2, 2}})}));
        b.push_back(scalar_elem({}, {e2, e2}));
        b.push_back(scalar_elem({{1, 2}}, {e2}));
      }
      return b;
    }
  }
}

std::vector<MomentExpr> default_slack_spec(int k, EntropyKind kind) {
  if (kind == EntropyKind::tsallis || k == 2) return {};
  const MomentSymbol e2 = sym({{1, 2}});
  auto product = [](const MomentSymbol& a, const MomentSymbol& b) {
    return MomentExpr(std::vector<MomentTerm>{MomentTerm(AlphaPoly(1), {a, b})});
  };
  if (k == 3) {
    return {product(sym({{1, 4}}), e2), product(e2, sym({{2, 2}}))};
  }
  if (k == 4) {
    return {product(sym({{1, 6}}), e2), product(e2, sym({{1, 2}, {2, 2}})),
            product(sym({{1, 4}}), sym({{2, 2}})), product(e2, sym({{3, 2}}))};
  }
  return {};
}

std::string GramVar::name() const {
  if (kind == Kind::entry) return "g" + std::to_string(i) + "_" + std::to_string(j);
  return "s" + std::to_string(slack);
}

int GramProblem::entry_index(int i, int j) const {
  // upper triangle, 1-based, row-major: (1,1),(1,2),...,(1,n),(2,2),...
  const int row = i - 1, col = j - 1, nn = n();
  return row * nn - row * (row - 1) / 2 + (col - row);
}

GramVar GramProblem::var(int index) const {
  GramVar v;
  if (index >= num_entries()) {
    v.kind = GramVar::Kind::slack;
    v.slack = index - num_entries();
    return v;
  }
  int row = 0;
  int remaining = index;
  while (remaining >= n() - row) {
    remaining -= n() - row;
    ++row;
  }
  v.kind = GramVar::Kind::entry;
  v.i = row + 1;
  v.j = row + 1 + remaining;
  return v;
}

int GramProblem::var_index(const GramVar& v) const {
  if (v.kind == GramVar::Kind::slack) return num_entries() + v.slack;
  return entry_index(v.i, v.j);
}

int GramProblem::var_index_by_name(const std::string& name) const {
  for (int idx = 0; idx < num_vars(); ++idx) {
    if (var(idx).name() == name) return idx;
  }
  throw std::invalid_argument("unknown Gram variable: " + name);
}

std::vector<int> GramProblem::free_vars() const {
  std::vector<bool> determined(num_vars(), false);
  for (const auto& c : constraints) {
    if (c.determined_var >= 0) determined[c.determined_var] = true;
  }
  std::vector<int> out;
  for (int idx = 0; idx < num_vars(); ++idx) {
    if (!determined[idx]) out.push_back(idx);
  }
  return out;
}

MomentExpr expand_basis_product(const GramBasisElement& a, const GramBasisElement& b) {
  std::map<int, int> pointwise = a.pointwise;
  for (const auto& [order, exp] : b.pointwise) pointwise[order] += exp;

  MomentExpr reduced;
  if (pointwise.empty()) {
    reduced = MomentExpr::constant(AlphaPoly(1));
  } else {
    int sum_exp = 0;
    for (const auto& [order, exp] : pointwise) sum_exp += exp;
    reduced = reduce_raw_integral(RawIntegral(-sum_exp, pointwise));
  }

  std::vector<MomentSymbol> scalars = a.scalar_moments;
  scalars.insert(scalars.end(), b.scalar_moments.begin(), b.scalar_moments.end());
  if (scalars.empty()) return reduced;
  MomentExpr scalar_part(std::vector<MomentTerm>{MomentTerm(AlphaPoly(1), std::move(scalars))});
  return reduced * scalar_part;
}

MomentExpr bracket_for_derivative(const DerivativeResult& d) {
  const AlphaPoly alpha = AlphaPoly::alpha();
  std::vector<MomentTerm> out;
  for (const auto& t : d.expr.terms()) {
    auto divided = t.coeff.divide_exact(alpha);
    if (!divided) {
      throw std::invalid_argument("derivative coefficient not divisible by alpha");
    }
    out.emplace_back(*divided * make_rational(12), t.symbols);
  }
  MomentExpr bracket{std::move(out)};
  if (d.order % 2 == 0) bracket = -bracket;
  return bracket;
}

MomentExpr bracket_for_concavity(const MomentExpr& pc_expr) {
  const AlphaPoly alpha = AlphaPoly::alpha();
  std::vector<MomentTerm> out;
  for (const auto& t : pc_expr.terms()) {
    auto divided = t.coeff.divide_exact(alpha);
    if (!divided) {
      throw std::invalid_argument("concavity coefficient not divisible by alpha");
    }
    out.emplace_back(-*divided, t.symbols);
  }
  return MomentExpr{std::move(out)};
}

namespace {

struct MultisetLess {
  bool operator()(const std::vector<MomentSymbol>& a, const std::vector<MomentSymbol>& b) const {
    return compare_symbol_multisets(a, b) < 0;
  }
};

// Template view: each constraint designates the variable it determines.
// Preference: gram entry with a constant (degree-0) nonzero pivot, smallest
// (i,j); else a slack with constant pivot; else the constraint is check-only.
void designate_determined_vars(GramProblem& p) {
  std::vector<bool> taken(p.num_vars(), false);
  for (auto& c : p.constraints) {
    int best = -1;
    for (const auto& [idx, coeff] : c.coeffs) {
      if (taken[idx] || coeff.degree() != 0) continue;
      if (best == -1) {
        best = idx;
        continue;
      }
      const GramVar vb = p.var(best), vc = p.var(idx);
      const bool b_entry = vb.kind == GramVar::Kind::entry;
      const bool c_entry = vc.kind == GramVar::Kind::entry;
      if (c_entry && !b_entry) best = idx;
      else if (c_entry == b_entry && idx < best) best = idx;
    }
    if (best >= 0) {
      c.determined_var = best;
      taken[best] = true;
    }
  }
}

}  // namespace

GramProblem build_gram_problem(const MomentExpr& bracket,
                               std::vector<GramBasisElement> basis,
                               std::vector<MomentExpr> slack_exprs) {
  if (basis.empty()) throw std::invalid_argument("empty Gram basis");
  const int k = basis.front().total_order();
  for (const auto& b : basis) {
    if (b.total_order() != k) {
      throw OrderMismatchError("basis element " + b.to_string() + " has order " +
                               std::to_string(b.total_order()) + ", expected " +
                               std::to_string(k));
    }
  }
  for (const auto& t : bracket.terms()) {
    if (t.total_order() != 2 * k) {
      throw OrderMismatchError("target term of order " + std::to_string(t.total_order()) +
                               " does not match basis order " + std::to_string(k));
    }
  }

  GramProblem p;
  p.basis = std::move(basis);
  p.bracket = bracket;
  p.slack_exprs = std::move(slack_exprs);

  std::map<std::vector<MomentSymbol>, std::map<int, AlphaPoly>, MultisetLess> rows;
  auto add_coeff = [&rows](const std::vector<MomentSymbol>& mono, int var, const AlphaPoly& c) {
    if (c.is_zero()) return;
    auto& row = rows[mono];
    auto [it, inserted] = row.emplace(var, c);
    if (!inserted) it->second += c;
  };

  const int n = p.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const MomentExpr expansion = expand_basis_product(p.basis[i - 1], p.basis[j - 1]);
      const Rational mult = make_rational(i == j ? 1 : 2);
      for (const auto& t : expansion.terms()) {
        add_coeff(t.symbols, p.entry_index(i, j), t.coeff * mult);
      }
    }
  }
  for (int s = 0; s < p.num_slacks(); ++s) {
    for (const auto& t : p.slack_exprs[s].terms()) {
      add_coeff(t.symbols, p.num_entries() + s, t.coeff);
    }
  }
  for (const auto& t : p.bracket.terms()) {
    rows.try_emplace(t.symbols);  // ensure a constraint row exists
  }

  for (auto& [mono, coeffs] : rows) {
    GramConstraint c;
    c.monomial = mono;
    c.coeffs = std::move(coeffs);
    std::erase_if(c.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    c.rhs = p.bracket.coefficient_of(mono);
    p.constraints.push_back(std::move(c));
  }
  designate_determined_vars(p);
  return p;
}

GramProblem build_gram_problem(const DerivativeResult& target,
                               std::vector<GramBasisElement> basis,
                               std::vector<MomentExpr> slack_exprs) {
  return build_gram_problem(bracket_for_derivative(target), std::move(basis),
                            std::move(slack_exprs));
}

AssembledGram assemble_matrix(const GramProblem& problem, const FittedParams& params) {
  std::vector<AlphaPoly> value(problem.num_vars());
  std::vector<bool> resolved(problem.num_vars(), false);

  for (const auto& [name, poly] : params.values) {
    const int idx = problem.var_index_by_name(name);
    value[idx] = poly;
    resolved[idx] = true;
  }

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& c : problem.constraints) {
      int unresolved = -1;
      bool multiple = false;
      for (const auto& [idx, coeff] : c.coeffs) {
        if (resolved[idx]) continue;
        if (unresolved >= 0) {
          multiple = true;
          break;
        }
        unresolved = idx;
      }
      if (multiple || unresolved < 0) continue;
      AlphaPoly residual = c.rhs;
      for (const auto& [idx, coeff] : c.coeffs) {
        if (idx != unresolved) residual -= coeff * value[idx];
      }
      auto solved = residual.divide_exact(c.coeffs.at(unresolved));
      if (!solved) {
        throw UnresolvedParameterError("entry " + problem.var(unresolved).name() +
                                       " is not an exact polynomial in alpha");
      }
      value[unresolved] = *solved;
      resolved[unresolved] = true;
      progress = true;
    }
  }

  for (int idx = 0; idx < problem.num_vars(); ++idx) {
    if (!resolved[idx]) {
      throw UnresolvedParameterError("unresolved Gram variable " + problem.var(idx).name());
    }
  }

  // every matching constraint must now be an exact identity
  for (const auto& c : problem.constraints) {
    AlphaPoly residual = c.rhs;
    for (const auto& [idx, coeff] : c.coeffs) residual -= coeff * value[idx];
    if (!residual.is_zero()) {
      std::ostringstream os;
      os << "constraint residual nonzero for monomial";
      for (const auto& m : c.monomial) os << " " << m.to_string();
      throw UnresolvedParameterError(os.str());
    }
  }

  AssembledGram out;
  out.matrix = PolyMatrix(problem.n());
  for (int i = 1; i <= problem.n(); ++i) {
    for (int j = i; j <= problem.n(); ++j) {
      out.matrix.set(i - 1, j - 1, value[problem.entry_index(i, j)]);
    }
  }
  out.slack_values.reserve(problem.num_slacks());
  for (int s = 0; s < problem.num_slacks(); ++s) {
    out.slack_values.push_back(value[problem.num_entries() + s]);
  }
  return out;
}

}  // namespace entropyflow
