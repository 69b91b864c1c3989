#include "entropyflow/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace entropyflow {

namespace {
constexpr long double kTwoPi = 6.283185307179586476925286766559L;
constexpr int kMaxDerivativeOrder = 24;
}  // namespace

MixtureDensity::MixtureDensity(std::vector<double> weights, std::vector<double> centers,
                               std::vector<double> initial_variances)
    : weights_(std::move(weights)),
      centers_(std::move(centers)),
      initial_variances_(std::move(initial_variances)) {
  if (weights_.empty() || weights_.size() != centers_.size() ||
      weights_.size() != initial_variances_.size()) {
    throw std::invalid_argument("mixture needs equal-length, nonempty parameter lists");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (w <= 0.0) throw std::invalid_argument("mixture weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("mixture weights must sum to 1");
  }
  for (double s : initial_variances_) {
    if (s < 0.0) throw std::invalid_argument("initial variances must be nonnegative");
  }
}

double MixtureDensity::min_center() const {
  return *std::min_element(centers_.begin(), centers_.end());
}
double MixtureDensity::max_center() const {
  return *std::max_element(centers_.begin(), centers_.end());
}
double MixtureDensity::max_initial_variance() const {
  return *std::max_element(initial_variances_.begin(), initial_variances_.end());
}
double MixtureDensity::min_initial_variance() const {
  return *std::min_element(initial_variances_.begin(), initial_variances_.end());
}

double MixtureDensity::variance() const {
  double mean = 0.0;
  for (size_t j = 0; j < weights_.size(); ++j) mean += weights_[j] * centers_[j];
  double second = 0.0;
  for (size_t j = 0; j < weights_.size(); ++j) {
    second += weights_[j] * (initial_variances_[j] + centers_[j] * centers_[j]);
  }
  return second - mean * mean;
}

void MixtureDensity::derivatives(long double x, long double t, int n, long double* out) const {
  if (n < 0 || n > kMaxDerivativeOrder) throw std::invalid_argument("derivative order out of range");
  if (!(t > 0.0L) && min_initial_variance() <= 0.0) {
    throw std::invalid_argument("t must be positive for point-mass components");
  }
  const int nc = components();
  // log-scale factoring keeps the component sum stable in the tails
  std::vector<long double> expo(nc), inv_sqrt_v(nc), z(nc);
  long double max_expo = -1e30L;
  for (int j = 0; j < nc; ++j) {
    const long double v = static_cast<long double>(initial_variances_[j]) + t;
    const long double zj = (x - static_cast<long double>(centers_[j])) / sqrtl(v);
    expo[j] = -0.5L * zj * zj + logl(static_cast<long double>(weights_[j])) -
              0.5L * logl(kTwoPi * v);
    inv_sqrt_v[j] = 1.0L / sqrtl(v);
    z[j] = zj;
    max_expo = std::max(max_expo, expo[j]);
  }
  for (int i = 0; i <= n; ++i) out[i] = 0.0L;
  for (int j = 0; j < nc; ++j) {
    const long double ej = expl(expo[j] - max_expo);
    // probabilists' Hermite polynomials: d^i/dx^i phi = (-1)^i v^{-i/2} He_i(z) phi
    long double he_prev = 0.0L, he = 1.0L;
    long double scale = 1.0L;
    for (int i = 0; i <= n; ++i) {
      out[i] += ej * scale * he * ((i % 2 == 0) ? 1.0L : -1.0L);
      const long double he_next = z[j] * he - static_cast<long double>(i) * he_prev;
      he_prev = he;
      he = he_next;
      scale *= inv_sqrt_v[j];
    }
  }
  const long double common = expl(max_expo);
  for (int i = 0; i <= n; ++i) out[i] *= common;
}

double MixtureDensity::density_derivative(double x, double t, int n) const {
  std::vector<long double> buf(n + 1);
  derivatives(static_cast<long double>(x), static_cast<long double>(t), n, buf.data());
  return static_cast<double>(buf[n]);
}

long double MixtureDensity::density_and_ratios(long double x, long double t, int n,
                                               long double* pbar) const {
  std::vector<long double> buf(n + 1);
  derivatives(x, t, n, buf.data());
  // leave the common exp factor inside buf[0]; ratios divide it out
  for (int i = 1; i <= n; ++i) pbar[i] = buf[i] / buf[0];
  return buf[0];
}

}  // namespace entropyflow
