#pragma once

namespace sincint {

enum class Family { SE, DE };

/// The distances 1 + T(u) (lower) and 1 - T(u) (upper), computed in a form
/// that stays accurate after forward() has rounded to +-1. Integrands with
/// endpoint singularities must be evaluated through these.
struct EndpointGaps {
  double lower;
  double upper;
};

/// Variable transformation from the real line onto (-1, 1):
///   SE: T(u) = tanh(u/2)            (single-exponential endpoint decay)
///   DE: T(u) = tanh((pi/2) sinh u)  (double-exponential endpoint decay)
class Transform {
 public:
  explicit Transform(Family family) : family_(family) {}

  Family family() const { return family_; }

  /// Supremum of admissible strip half-widths d: pi for SE, pi/2 for DE.
  double strip_limit() const;

  /// T(u). Saturates to +-1 in floating point once the true value is within
  /// half an ulp of the endpoint; use endpoint_gaps() for the residuals.
  double forward(double u) const;

  /// T'(u) > 0. Underflows to 0 for large |u| (DE) without producing NaN.
  double derivative(double u) const;

  /// T^{-1}(x) for x strictly inside (-1, 1); throws otherwise.
  double inverse(double x) const;

  EndpointGaps endpoint_gaps(double u) const;

 private:
  Family family_;
};

/// Auxiliary linear function eta(x) = (1 + x) / 2.
double eta(double x);

}  // namespace sincint
