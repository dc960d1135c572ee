#pragma once

#include <cstdint>

namespace sincint {

/// Normalized sinc: sin(pi x) / (pi x), with sinc(0) = 1.
double sinc(double x);

/// Sine integral Si(x) = int_0^x sin(t)/t dt.
/// Absolute accuracy is a few ulp over the whole real line.
double sine_integral(double x);

/// sigma_k = int_0^k sinc(x) dx = Si(pi k) / pi. Odd in k.
double sigma(std::int64_t k);

struct SincBasisParams {
  std::int64_t j = 0;  // node index
  double h = 1.0;      // mesh size, > 0
};

/// Antiderivative of the j-th sinc basis function on mesh h:
/// J(j,h)(t) = (h/pi) * (pi/2 + Si(pi (t - j h) / h)).
/// Ranges over [0, h] up to the Gibbs overshoot (roughly [-0.09 h, 1.09 h]).
double j_basis(const SincBasisParams& p, double t);

}  // namespace sincint
