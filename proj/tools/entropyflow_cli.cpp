// Command-line surface: derive / reduce / certify / verify-identities /
// scan / bounds / tsallis2-check. Deterministic given flags; results go to
// stdout or --output, progress and machine-readable errors to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "entropyflow/certificate.hpp"
#include "entropyflow/fitting.hpp"
#include "entropyflow/identity_suite.hpp"
#include "entropyflow/json_io.hpp"
#include "entropyflow/numeric_eval.hpp"
#include "entropyflow/raw_integral.hpp"
#include "entropyflow/sdp.hpp"
#include "entropyflow/sign_scan.hpp"

namespace {

using namespace entropyflow;
using nlohmann::json;

struct OutputSink {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text << "\n";
  }
};

int default_jobs() {
  if (const char* env = std::getenv("ENTROPYFLOW_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) throw CLI::ValidationError("empty list: " + csv);
  return out;
}

std::vector<int> parse_orders(const std::string& spec) {
  // "1..9" or "2,3,5"
  std::vector<int> out;
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const int lo = std::stoi(spec.substr(0, dots));
    const int hi = std::stoi(spec.substr(dots + 2));
    for (int k = lo; k <= hi; ++k) out.push_back(k);
  } else {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(std::stoi(item));
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty order list: " + spec);
  return out;
}

std::map<int, int> parse_factors(const std::string& spec) {
  // "1:2,2:1"
  std::map<int, int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("bad factor: " + item);
    out[std::stoi(item.substr(0, colon))] += std::stoi(item.substr(colon + 1));
  }
  return out;
}

MixtureDensity load_density(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open density file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return mixture_from_json(buf.str());
}

std::string render_derivative(const DerivativeResult& d) {
  std::ostringstream os;
  os << "d^" << d.order << "/dt^" << d.order << " " << entropy_kind_name(d.kind)
     << " entropy";
  if (d.normalizer_power != 0) {
    os << "  (times Z^" << d.normalizer_power << ", Z = int p^a dx)";
  }
  os << "\n  = " << d.expr.to_string();
  return os.str();
}

int run_derive(const std::string& kind_name, int order, const std::string& format,
               const OutputSink& sink) {
  const EntropyKind kind = entropy_kind_from_name(kind_name);
  const DerivativeResult d = entropy_derivative(kind, order);
  sink.write(format == "json" ? derivative_result_to_json(d, 2) : render_derivative(d));
  return 0;
}

int run_reduce(int offset, const std::string& factors, const std::string& format,
               const OutputSink& sink) {
  const RawIntegral r(offset, parse_factors(factors));
  const MomentExpr reduced = reduce_raw_integral(r);
  if (format == "json") {
    sink.write(moment_expr_to_json(reduced, 2));
  } else {
    sink.write(r.to_string() + "  ->  Z * [" + reduced.to_string() + "]");
  }
  return 0;
}

int run_verify_identities(const std::string& format, const OutputSink& sink) {
  const auto checks = run_identity_suite();
  int failed = 0;
  if (format == "json") {
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back({{"group", c.group}, {"name", c.name}, {"pass", c.pass}});
      failed += !c.pass;
    }
    sink.write(json{{"checks", arr}, {"failed", failed}}.dump(2));
  } else {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.pass ? "[ok]   " : "[FAIL] ") << c.group << ": " << c.name << "\n";
      failed += !c.pass;
    }
    os << (failed == 0 ? "all identities hold exactly"
                       : std::to_string(failed) + " identities FAILED");
    sink.write(os.str());
  }
  return failed == 0 ? 0 : 1;
}

int run_certify(const std::string& kind_name, int order, const std::string& alpha_grid,
                int fit_degree, long round_denom, double interval_lo, double interval_hi,
                const std::string& slack_spec, bool closed_hi, double pin_zero, int jobs,
                const OutputSink& sink) {
  const EntropyKind kind = entropy_kind_from_name(kind_name);
  const auto basis = default_gram_basis(order, kind);
  std::vector<MomentExpr> slacks;
  if (slack_spec == "default") {
    slacks = default_slack_spec(order, kind);
  } else if (slack_spec != "none") {
    throw CLI::ValidationError("--slack-spec must be 'default' or 'none'");
  }
  const auto problem =
      build_gram_problem(entropy_derivative(kind, order), basis, std::move(slacks));

  SampleAndFitOptions opts;
  opts.jobs = jobs;
  if (pin_zero > 0.0) {
    // boundary point where the family collapses: all free variables zero
    std::map<std::string, double> zeros;
    for (int var : problem.free_vars()) zeros[problem.var(var).name()] = 0.0;
    opts.pinned.emplace_back(pin_zero, std::move(zeros));
  }
  const auto grid = parse_list(alpha_grid);
  std::cerr << "solving feasibility at " << grid.size() << " grid points\n";
  const FittedParams fitted = sample_and_fit(problem, grid, fit_degree, round_denom, opts);
  std::cerr << "assembling and certifying on (" << interval_lo << ", " << interval_hi
            << ")\n";
  const auto assembled = assemble_matrix(problem, fitted);
  CertifyOptions copts;
  copts.closed_hi = closed_hi;
  const auto cert = certify_interval(
      assembled.matrix, assembled.slack_values,
      round_to_denominator(interval_lo, 1000000), round_to_denominator(interval_hi, 1000000),
      copts);

  json out;
  out["fitted_params"] = json::parse(fitted_params_to_json(fitted));
  out["certificate"] = json::parse(certificate_to_json(cert));
  sink.write(out.dump(2));
  return cert.verdict == CertVerdict::failed ? 1 : 0;
}

int run_scan(const std::string& density_path, const std::string& kind_name,
             const std::string& orders, const std::string& alphas, double t_min, double t_max,
             int t_points, bool log_grid, int jobs, const OutputSink& sink) {
  const MixtureDensity d = load_density(density_path);
  const EntropyKind kind = entropy_kind_from_name(kind_name);
  ScanOptions opts;
  opts.jobs = jobs;
  opts.quad.rel_tol = 1e-13;
  opts.quad.abs_tol = 1e-30;
  const auto grid = make_t_grid(t_min, t_max, t_points, log_grid);
  const auto order_list = parse_orders(orders);
  const auto alpha_list = parse_list(alphas);
  std::cerr << "scanning " << order_list.size() * alpha_list.size() << " cells x "
            << grid.size() << " grid points\n";
  // run cell by cell so progress streams; merge order stays deterministic
  SignScanReport report;
  report.kind = kind;
  for (int k : order_list) {
    for (double alpha : alpha_list) {
      SignScanReport one = scan_signs(d, kind, {k}, {alpha}, grid, opts);
      const auto& cell = one.cells.front();
      std::cerr << "cell k=" << k << " alpha=" << alpha << ": "
                << cell.violations.size() << " violation(s)"
                << (cell.error.empty() ? "" : " [error: " + cell.error + "]") << "\n";
      report.cells.push_back(std::move(one.cells.front()));
    }
  }
  sink.write(scan_report_to_json(report, 2));
  return 0;
}

int run_bounds(double alpha, double t, double sigma2, const std::string& density_path,
               const OutputSink& sink) {
  const auto b = entropy_bounds(alpha, t, sigma2);
  json out;
  out["alpha"] = alpha;
  out["t"] = t;
  out["sigma2"] = sigma2;
  out["lower"] = b.lower;
  if (b.upper) out["upper"] = *b.upper;
  if (!density_path.empty()) {
    const MixtureDensity d = load_density(density_path);
    out["entropy"] =
        entropy_eval(d, EntropyKind::renyi, EvalPoint(alpha, t), QuadratureConfig{});
  }
  sink.write(out.dump(2));
  return 0;
}

int run_tsallis2(const std::string& density_path, int order, double t,
                 const OutputSink& sink) {
  const MixtureDensity d = load_density(density_path);
  QuadratureConfig q;
  const auto chk = tsallis2_identity_check(d, order, t, q);
  json out;
  out["order"] = order;
  out["t"] = t;
  out["derivative"] = chk.lhs;
  out["signed_sobolev_integral"] = chk.rhs;
  out["relative_gap"] =
      std::abs(chk.lhs - chk.rhs) / std::max({std::abs(chk.rhs), 1e-300});
  sink.write(out.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric calculus of Renyi/Tsallis entropy along the heat flow"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "text";
  std::string output_path;
  int jobs = default_jobs();
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output_path, "write results to a file instead of stdout");
  app.add_option("--jobs", jobs, "worker threads for scan/certify")->check(CLI::PositiveNumber);

  auto* derive = app.add_subcommand("derive", "symbolic k-th entropy derivative");
  std::string entropy = "renyi";
  int order = 1;
  derive->add_option("--entropy", entropy)->check(CLI::IsMember({"renyi", "tsallis", "shannon"}));
  derive->add_option("--order", order)->required()->check(CLI::Range(1, 12));

  auto* reduce = app.add_subcommand("reduce", "integration-by-parts reduction of a raw integral");
  int offset = 0;
  std::string factors;
  reduce->add_option("--offset", offset)->required();
  reduce->add_option("--factors", factors, "e.g. 1:2,2:1")->required();

  auto* verify = app.add_subcommand("verify-identities", "exact identity suite");

  auto* certify = app.add_subcommand("certify", "SDP sampling, curve fit, exact certification");
  std::string alpha_grid = "0.4,0.5,0.6,0.7,0.8,0.9,1.0";
  int fit_degree = 4;
  long round_denom = 10000;
  std::vector<double> interval = {0.5, 0.84};
  std::string slack_spec = "default";
  bool closed_hi = false;
  certify->add_option("--entropy", entropy)->check(CLI::IsMember({"renyi", "tsallis", "shannon"}));
  certify->add_option("--order", order)->required()->check(CLI::Range(2, 4));
  certify->add_option("--alpha-grid", alpha_grid);
  certify->add_option("--fit-degree", fit_degree)->check(CLI::Range(0, 8));
  certify->add_option("--round-denom", round_denom)->check(CLI::PositiveNumber);
  certify->add_option("--interval", interval, "certification interval l u")->expected(2);
  certify->add_option("--slack-spec", slack_spec)->check(CLI::IsMember({"default", "none"}));
  certify->add_flag("--closed", closed_hi, "also certify the right endpoint exactly");
  double pin_zero = 0.0;
  certify->add_option("--pin-zero", pin_zero,
                      "append an all-zero data point at this alpha to the fit");

  auto* scan = app.add_subcommand("scan", "sign-violation scan over (k, alpha, t)");
  std::string density_path;
  std::string orders_spec = "1..4";
  std::string alphas_spec = "1.5";
  double t_min = 0.05, t_max = 50.0;
  int t_points = 64;
  bool log_grid = false;
  scan->add_option("--density", density_path, "mixture JSON file")->required();
  scan->add_option("--entropy", entropy)->check(CLI::IsMember({"renyi", "tsallis", "shannon"}));
  scan->add_option("--orders", orders_spec, "e.g. 2,3 or 1..9");
  scan->add_option("--alphas", alphas_spec, "comma-separated list");
  scan->add_option("--t-min", t_min)->check(CLI::PositiveNumber);
  scan->add_option("--t-max", t_max)->check(CLI::PositiveNumber);
  scan->add_option("--t-points", t_points)->check(CLI::Range(2, 100000));
  scan->add_flag("--log-grid", log_grid);

  auto* bounds = app.add_subcommand("bounds", "entropy bounds at (alpha, t, sigma^2)");
  double alpha = 2.0, t_at = 1.0, sigma2 = 1.0;
  std::string bounds_density;
  bounds->add_option("--alpha", alpha)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--t", t_at)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--sigma2", sigma2)->check(CLI::NonNegativeNumber);
  bounds->add_option("--density", bounds_density, "optional mixture JSON for the sandwich");

  auto* ts2 = app.add_subcommand("tsallis2-check", "order-2 Tsallis derivative identity");
  ts2->add_option("--density", density_path)->required();
  ts2->add_option("--order", order)->required()->check(CLI::Range(1, 9));
  ts2->add_option("--t", t_at)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const OutputSink sink{output_path};
  try {
    if (derive->parsed()) return run_derive(entropy, order, format, sink);
    if (reduce->parsed()) return run_reduce(offset, factors, format, sink);
    if (verify->parsed()) return run_verify_identities(format, sink);
    if (certify->parsed()) {
      return run_certify(entropy, order, alpha_grid, fit_degree, round_denom, interval[0],
                         interval[1], slack_spec, closed_hi, pin_zero, jobs, sink);
    }
    if (scan->parsed()) {
      return run_scan(density_path, entropy, orders_spec, alphas_spec, t_min, t_max, t_points,
                      log_grid, jobs, sink);
    }
    if (bounds->parsed()) return run_bounds(alpha, t_at, sigma2, bounds_density, sink);
    if (ts2->parsed()) return run_tsallis2(density_path, order, t_at, sink);
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
