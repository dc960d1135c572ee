#include "sincint/special.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>

namespace sincint {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Error-free transformations (Knuth two-sum, FMA product). The Si power
// series below runs in double-double: its leading terms reach ~6e4 near
// x = 16 while the result is O(1), so plain doubles would lose the last
// four digits right where the series hands over to the continued fraction.
struct DD {
  double hi, lo;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD x, DD y) {
  DD s = two_sum(x.hi, y.hi);
  s.lo += x.lo + y.lo;
  return two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD x, double d) {
  DD p = two_prod(x.hi, d);
  p.lo += x.lo * d;
  return two_sum(p.hi, p.lo);
}

inline DD dd_div(DD x, double d) {
  const double q1 = x.hi / d;
  const DD p = two_prod(q1, d);
  const double q2 = ((x.hi - p.hi) - p.lo + x.lo) / d;
  return two_sum(q1, q2);
}

// Maclaurin series Si(x) = sum_m (-1)^m x^(2m+1) / ((2m+1) (2m+1)!),
// used for |x| <= 16. Terms are generated by a compensated recurrence.
double si_series(double x) {
  const DD x2 = two_prod(x, x);
  DD r{x, 0.0};  // (-1)^m x^(2m+1) / (2m+1)!
  DD sum{0.0, 0.0};
  for (double k = 1.0; k < 200.0; k += 2.0) {
    sum = dd_add(sum, dd_div(r, k));
    if (std::abs(r.hi) <= 1e-34 * k * std::abs(sum.hi)) break;
    DD t = dd_mul(r, -x2.hi);
    t = dd_add(t, dd_mul(r, -x2.lo));
    r = dd_div(t, (k + 1.0) * (k + 2.0));
  }
  return sum.hi + sum.lo;
}

// Auxiliary functions of the asymptotic form Si(x) = pi/2 - f cos x - g sin x
// with g + i f given by the continued fraction
//   1 / (z + 1 - 1^2 / (z + 3 - 2^2 / (z + 5 - ...)))  at  z = -i x,
// evaluated by the modified Lentz algorithm. For x > 16 this converges in
// at most ~25 iterations and is accurate to full double precision.
void si_aux(double x, double& f, double& g) {
  using C = std::complex<double>;
  constexpr double kTiny = 1e-290;
  const C z(0.0, -x);
  C b = z + 1.0;
  C c = 1.0 / kTiny;
  C d = 1.0 / b;
  C h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  g = h.real();
  f = h.imag();
}

}  // namespace

double sinc(double x) {
  if (!std::isfinite(x)) throw std::domain_error("sinc: non-finite argument");
  const double px = kPi * x;
  if (std::abs(px) < 1e-4) return 1.0 - px * px / 6.0;
  return std::sin(px) / px;
}

double sine_integral(double x) {
  if (!std::isfinite(x)) throw std::domain_error("sine_integral: non-finite argument");
  const double ax = std::abs(x);
  double v;
  if (ax <= 16.0) {
    v = si_series(ax);
  } else {
    double f, g;
    si_aux(ax, f, g);
    v = kPi / 2 - f * std::cos(ax) - g * std::sin(ax);
  }
  return x < 0.0 ? -v : v;
}

double sigma(std::int64_t k) {
  if (std::llabs(k) > 1000000)
    throw std::invalid_argument("sigma: |k| exceeds the 1e6 grid-extent guard");
  if (k == 0) return 0.0;
  const double v = sine_integral(kPi * static_cast<double>(std::llabs(k))) / kPi;
  return k < 0 ? -v : v;
}

double j_basis(const SincBasisParams& p, double t) {
  if (!(p.h > 0.0)) throw std::invalid_argument("j_basis: mesh size must be positive");
  if (!std::isfinite(t)) throw std::domain_error("j_basis: non-finite argument");
  const double arg = kPi * (t - static_cast<double>(p.j) * p.h) / p.h;
  // h/2 + h Si/pi rather than (h/pi)(pi/2 + Si): exact h/2 at the node center
  return 0.5 * p.h + p.h * sine_integral(arg) / kPi;
}

}  // namespace sincint
