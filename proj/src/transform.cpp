#include "sincint/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace sincint {
namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2;
}  // namespace

double Transform::strip_limit() const { return family_ == Family::SE ? kPi : kHalfPi; }

double Transform::forward(double u) const {
  if (!std::isfinite(u)) throw std::domain_error("Transform::forward: non-finite argument");
  if (family_ == Family::SE) return std::tanh(0.5 * u);
  return std::tanh(kHalfPi * std::sinh(u));
}

double Transform::derivative(double u) const {
  if (family_ == Family::SE) {
    const double c = std::cosh(0.5 * u);
    if (std::isinf(c)) return 0.0;
    return 0.5 / (c * c);  // c*c overflow -> 0
  }
  const double c = std::cosh(kHalfPi * std::sinh(u));
  if (std::isinf(c)) return 0.0;
  return kHalfPi * std::cosh(u) / (c * c);
}

double Transform::inverse(double x) const {
  if (!(std::abs(x) < 1.0))
    throw std::domain_error("Transform::inverse: x must lie strictly inside (-1, 1)");
  if (family_ == Family::SE) return 2.0 * std::atanh(x);
  return std::asinh(std::atanh(x) / kHalfPi);
}

EndpointGaps Transform::endpoint_gaps(double u) const {
  // 1 -+ tanh(w) = 2 / (1 + e^{+-2w}); exp overflow turns a gap into an
  // exact 0, exp underflow into an exact 2.
  const double w2 = family_ == Family::SE ? u : kPi * std::sinh(u);
  return {2.0 / (1.0 + std::exp(-w2)), 2.0 / (1.0 + std::exp(w2))};
}

double eta(double x) { return 0.5 * (1.0 + x); }

}  // namespace sincint
