#pragma once

#include <stdexcept>
#include <string>

namespace entropyflow {

struct NonCanonicalError : std::invalid_argument {
  explicit NonCanonicalError(const std::string& what) : std::invalid_argument(what) {}
};

struct HomogeneityViolation : std::invalid_argument {
  explicit HomogeneityViolation(const std::string& what) : std::invalid_argument(what) {}
};

struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct OrderMismatchError : std::invalid_argument {
  explicit OrderMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedOrderError : std::invalid_argument {
  explicit UnsupportedOrderError(const std::string& what) : std::invalid_argument(what) {}
};

struct UnresolvedParameterError : std::runtime_error {
  explicit UnresolvedParameterError(const std::string& what) : std::runtime_error(what) {}
};

struct EndpointRootError : std::runtime_error {
  explicit EndpointRootError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericalFailure : std::runtime_error {
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureNonConvergence : std::runtime_error {
  explicit QuadratureNonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct SpectralIllConditioned : std::runtime_error {
  explicit SpectralIllConditioned(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entropyflow
