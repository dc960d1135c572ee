#pragma once

#include "sincint/params.hpp"

namespace sincint {

/// Discretization error bound of the sinc indefinite integration on the
/// real line: 4 h e^(-pi d / h) / (pi d (1 - e^(-2 pi d / h))) * lambda,
/// where lambda bounds the strip-boundary integral of |f|.
double discretization_bound(double h, double d, double lambda);

/// Upper bound for lambda of the DE-transformed integrand:
/// 2^(alpha+beta+1) K / (mu cos^(alpha+beta)((pi/2) sin d) cos d),
/// valid for 0 < d < pi/2.
double lambda_bound_de(const AnalyticityParams& ap);

/// Optional slowly-varying factors in front of the exponential rates.
enum class RatePrefactor { none, sqrt_n, log_over_n };

/// Theoretical convergence-rate expression, without the unknown constant:
///   SE: exp(-sqrt(pi d mu n))
///   DE: exp(-pi d n / log(2 d n / mu))
/// Callers fit a multiplicative constant when overlaying on measured data.
double rate_curve(Family family, const AnalyticityParams& ap, int n,
                  RatePrefactor prefactor = RatePrefactor::none);

}  // namespace sincint
