#include "entropyflow/json_io.hpp"

#include <json.hpp>

namespace entropyflow {

namespace {

using nlohmann::json;

json rational_list(const std::vector<Rational>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(rational_to_string(c));
  return arr;
}

json poly_to_json(const AlphaPoly& p) { return rational_list(p.coefficients()); }

AlphaPoly poly_from_json(const json& arr) {
  std::vector<Rational> coeffs;
  for (const auto& item : arr) coeffs.push_back(rational_from_string(item.get<std::string>()));
  return AlphaPoly(std::move(coeffs));
}

json expr_to_json(const MomentExpr& e) {
  json terms = json::array();
  for (const auto& t : e.terms()) {
    json term;
    term["coeff"] = poly_to_json(t.coeff);
    json symbols = json::array();
    // distinct symbols with multiplicities
    size_t i = 0;
    while (i < t.symbols.size()) {
      size_t j = i;
      while (j < t.symbols.size() && t.symbols[j] == t.symbols[i]) ++j;
      json sym;
      json factors = json::object();
      for (const auto& [order, exp] : t.symbols[i].factors()) {
        factors[std::to_string(order)] = exp;
      }
      sym["factors"] = factors;
      sym["power"] = static_cast<int>(j - i);
      symbols.push_back(sym);
      i = j;
    }
    term["symbols"] = symbols;
    terms.push_back(term);
  }
  return json{{"terms", terms}};
}

MomentExpr expr_from_json(const json& j) {
  std::vector<MomentTerm> terms;
  for (const auto& term : j.at("terms")) {
    AlphaPoly coeff = poly_from_json(term.at("coeff"));
    std::vector<MomentSymbol> symbols;
    for (const auto& sym : term.at("symbols")) {
      std::map<int, int> factors;
      for (const auto& [key, value] : sym.at("factors").items()) {
        factors[std::stoi(key)] = value.get<int>();
      }
      const int power = sym.value("power", 1);
      for (int p = 0; p < power; ++p) symbols.push_back(MomentSymbol::make(factors));
    }
    terms.emplace_back(std::move(coeff), std::move(symbols));
  }
  return MomentExpr(std::move(terms));
}

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

json evidence_to_json(const PolyEvidence& e) {
  json out;
  out["poly"] = poly_to_json(e.poly);
  out["roots_in_interval"] = e.roots_in_interval;
  out["midpoint_sign"] = e.midpoint_sign;
  if (e.endpoint_perturbed) out["endpoint_perturbed"] = true;
  return out;
}

}  // namespace

std::string moment_expr_to_json(const MomentExpr& e, int indent) {
  return dump(expr_to_json(e), indent);
}

MomentExpr moment_expr_from_json(const std::string& json_text) {
  return expr_from_json(json::parse(json_text));
}

std::string derivative_result_to_json(const DerivativeResult& d, int indent) {
  json j;
  j["kind"] = entropy_kind_name(d.kind);
  j["order"] = d.order;
  j["normalizer_power"] = d.normalizer_power;
  j["expr"] = expr_to_json(d.expr);
  return dump(j, indent);
}

DerivativeResult derivative_result_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  DerivativeResult d;
  d.kind = entropy_kind_from_name(j.at("kind").get<std::string>());
  d.order = j.at("order").get<int>();
  d.normalizer_power = j.at("normalizer_power").get<int>();
  d.expr = expr_from_json(j.at("expr"));
  return d;
}

std::string fitted_params_to_json(const FittedParams& p, int indent) {
  json j;
  j["fit_degree"] = p.fit_degree;
  j["round_denominator"] = p.round_denominator;
  json values = json::object();
  for (const auto& [name, poly] : p.values) values[name] = poly_to_json(poly);
  j["params"] = values;
  return dump(j, indent);
}

FittedParams fitted_params_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  FittedParams p;
  p.fit_degree = j.at("fit_degree").get<int>();
  p.round_denominator = j.at("round_denominator").get<long>();
  for (const auto& [name, arr] : j.at("params").items()) {
    p.values[name] = poly_from_json(arr);
  }
  return p;
}

std::string mixture_to_json(const MixtureDensity& d, int indent) {
  json j;
  j["weights"] = d.weights();
  j["centers"] = d.centers();
  j["initial_variances"] = d.initial_variances();
  return dump(j, indent);
}

MixtureDensity mixture_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  return MixtureDensity(j.at("weights").get<std::vector<double>>(),
                        j.at("centers").get<std::vector<double>>(),
                        j.at("initial_variances").get<std::vector<double>>());
}

std::string certificate_to_json(const PositivityCertificate& c, int indent) {
  json j;
  j["interval"] = {rational_to_string(c.lo), rational_to_string(c.hi)};
  json minors = json::array();
  for (const auto& m : c.minors) minors.push_back(evidence_to_json(m));
  j["minors"] = minors;
  json slacks = json::array();
  for (const auto& s : c.slacks) slacks.push_back(evidence_to_json(s));
  j["slacks"] = slacks;
  j["verdict"] = cert_verdict_name(c.verdict);
  if (c.certified_subinterval) {
    j["certified_subinterval"] = {rational_to_string(c.certified_subinterval->first),
                                  rational_to_string(c.certified_subinterval->second)};
  }
  if (c.endpoint) {
    j["endpoint"] = rational_to_string(*c.endpoint);
    j["endpoint_zero_rows"] = c.endpoint_zero_rows;
  }
  return dump(j, indent);
}

std::string scan_report_to_json(const SignScanReport& r, int indent) {
  json j;
  j["entropy"] = entropy_kind_name(r.kind);
  json cells = json::array();
  for (const auto& c : r.cells) {
    json cell;
    cell["order"] = c.order;
    cell["alpha"] = c.alpha;
    cell["t_grid"] = c.t_grid;
    cell["values"] = c.values;
    cell["error_estimates"] = c.error_estimates;
    cell["signs"] = c.signs;
    json violations = json::array();
    for (const auto& v : c.violations) {
      json vio;
      vio["t_lo"] = v.t_lo;
      vio["t_hi"] = v.t_hi;
      vio["worst_value"] = v.worst_value;
      vio["worst_t"] = v.worst_t;
      if (v.spectral_checked) vio["spectral_value"] = v.spectral_value;
      violations.push_back(vio);
    }
    cell["violations"] = violations;
    if (!c.error.empty()) cell["error"] = c.error;
    cells.push_back(cell);
  }
  j["cells"] = cells;
  return dump(j, indent);
}

}  // namespace entropyflow
