#pragma once

#include <map>
#include <string>

#include "entropyflow/errors.hpp"
#include "entropyflow/moment.hpp"

namespace entropyflow {

// Un-normalized integral  int p^{alpha+offset} prod p_n^{k_n} dx.
// Homogeneity invariant: offset = -(sum of exponents), checked at
// construction; it holds for every integral the heat flow produces because
// the integrand is p^alpha times powers of the ratios p_n/p.
struct RawIntegral {
  int offset = 0;
  std::map<int, int> factors;

  RawIntegral() = default;
  RawIntegral(int offset_, std::map<int, int> factors_);

  static RawIntegral of_symbol(const MomentSymbol& m);

  int total_order() const;
  std::string to_string() const;
};

}  // namespace entropyflow
