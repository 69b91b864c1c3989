#pragma once

#include <string>

#include "entropyflow/certificate.hpp"
#include "entropyflow/gram.hpp"
#include "entropyflow/heat_calculus.hpp"
#include "entropyflow/mixture.hpp"
#include "entropyflow/sign_scan.hpp"

namespace entropyflow {

// Shared schema: {"terms":[{"coeff":["num/den",...],
//                           "symbols":[{"factors":{"1":4},"power":1},...]}]}
// coefficients ascending in alpha-degree, rationals as "p/q" strings.
std::string moment_expr_to_json(const MomentExpr& e, int indent = -1);
MomentExpr moment_expr_from_json(const std::string& json_text);

std::string derivative_result_to_json(const DerivativeResult& d, int indent = -1);
DerivativeResult derivative_result_from_json(const std::string& json_text);

std::string fitted_params_to_json(const FittedParams& p, int indent = -1);
FittedParams fitted_params_from_json(const std::string& json_text);

// {"weights":[...],"centers":[...],"initial_variances":[...]}
std::string mixture_to_json(const MixtureDensity& d, int indent = -1);
MixtureDensity mixture_from_json(const std::string& json_text);

// {"interval":["l","u"],"minors":[{"poly":[...],"roots_in_interval":0,
//  "midpoint_sign":1}],"slacks":[...],"verdict":"positive-definite"}
std::string certificate_to_json(const PositivityCertificate& c, int indent = -1);

std::string scan_report_to_json(const SignScanReport& r, int indent = -1);

}  // namespace entropyflow
