#include "sincint/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace sincint {
namespace {
constexpr double kPi = 3.14159265358979323846;
}

double discretization_bound(double h, double d, double lambda) {
  if (!(h > 0.0) || !(d > 0.0) || !(lambda >= 0.0))
    throw std::invalid_argument("discretization_bound: need h > 0, d > 0, lambda >= 0");
  const double q = std::exp(-kPi * d / h);
  return 4.0 * h * q / (kPi * d * (1.0 - q * q)) * lambda;
}

double lambda_bound_de(const AnalyticityParams& ap) {
  if (!(ap.d > 0.0 && ap.d < kPi / 2))
    throw std::domain_error("lambda_bound_de: requires 0 < d < pi/2");
  if (!(ap.K > 0.0) || !(ap.alpha > 0.0) || !(ap.beta > 0.0))
    throw std::invalid_argument("lambda_bound_de: K, alpha, beta must be positive");
  const double ab = ap.alpha + ap.beta;
  return std::pow(2.0, ab + 1.0) * ap.K /
         (ap.mu() * std::pow(std::cos(kPi / 2 * std::sin(ap.d)), ab) * std::cos(ap.d));
}

double rate_curve(Family family, const AnalyticityParams& ap, int n, RatePrefactor prefactor) {
  if (n < 1) throw std::invalid_argument("rate_curve: n must be >= 1");
  const double mu = ap.mu();
  double rate;
  if (family == Family::SE) {
    rate = std::exp(-std::sqrt(kPi * ap.d * mu * n));
  } else {
    const double ratio = 2.0 * ap.d * n / mu;
    if (!(ratio > 1.0)) throw std::invalid_argument("rate_curve: DE requires 2*d*n/mu > 1");
    rate = std::exp(-kPi * ap.d * n / std::log(ratio));
  }
  switch (prefactor) {
    case RatePrefactor::none:
      return rate;
    case RatePrefactor::sqrt_n:
      return std::sqrt(static_cast<double>(n)) * rate;
    case RatePrefactor::log_over_n:
      return std::log(2.0 * ap.d * n / mu) / n * rate;
  }
  return rate;
}

}  // namespace sincint
