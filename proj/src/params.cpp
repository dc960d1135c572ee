#include "sincint/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sincint {
namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(Family family, const AnalyticityParams& ap) {
  if (!(ap.alpha > 0.0 && ap.alpha <= 1.0))
    throw std::invalid_argument("params: alpha must lie in (0, 1]");
  if (!(ap.beta > 0.0 && ap.beta <= 1.0))
    throw std::invalid_argument("params: beta must lie in (0, 1]");
  const double limit = Transform(family).strip_limit();
  if (!(ap.d > 0.0 && ap.d < limit))
    throw std::invalid_argument("params: d must lie in (0, " + std::to_string(limit) +
                                ") for this family");
}

}  // namespace

double select_h(Family family, const AnalyticityParams& ap, int n) {
  validate(family, ap);
  if (n < 1) throw std::invalid_argument("select_h: n must be >= 1");
  const double mu = ap.mu();
  if (family == Family::SE) return std::sqrt(kPi * ap.d / (mu * n));
  const double ratio = 2.0 * ap.d * n / mu;
  if (!(ratio > 1.0))
    throw std::invalid_argument("select_h: DE mesh requires 2*d*n/mu > 1 (got " +
                                std::to_string(ratio) + ")");
  return std::log(ratio) / n;
}

std::pair<int, int> select_mn(Family family, const AnalyticityParams& ap, int n, double h) {
  validate(family, ap);
  if (n < 1) throw std::invalid_argument("select_mn: n must be >= 1");
  if (!(h > 0.0)) throw std::invalid_argument("select_mn: h must be positive");
  // mu = alpha branch when alpha <= beta; both branches coincide at a tie
  int M, N;
  if (family == Family::SE) {
    if (ap.alpha <= ap.beta) {
      M = n;
      N = static_cast<int>(std::ceil(ap.alpha / ap.beta * n));
    } else {
      N = n;
      M = static_cast<int>(std::ceil(ap.beta / ap.alpha * n));
    }
  } else {
    if (ap.alpha <= ap.beta) {
      M = n;
      N = n - static_cast<int>(std::floor(std::log(ap.beta / ap.alpha) / h));
    } else {
      N = n;
      M = n - static_cast<int>(std::floor(std::log(ap.alpha / ap.beta) / h));
    }
  }
  if (M < 1 || N < 1)
    throw std::invalid_argument(
        "select_mn: truncation index fell below 1; n is too small for this alpha/beta ratio");
  return {M, N};
}

GridParams make_grid(Family family, const AnalyticityParams& ap, int n, bool symmetric) {
  GridParams g;
  g.n = n;
  g.h = select_h(family, ap, n);
  if (symmetric) {
    g.M = n;
    g.N = n;
  } else {
    const auto [M, N] = select_mn(family, ap, n, g.h);
    g.M = M;
    g.N = N;
  }
  return g;
}

}  // namespace sincint
