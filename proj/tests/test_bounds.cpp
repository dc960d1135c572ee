#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sincint/bounds.hpp"

using namespace sincint;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE_BEGIN("bounds");

TEST_CASE("discretization_bound values") {
  CHECK(discretization_bound(0.5, 1.0, 0.0) == 0.0);
  // 2 e^{-2 pi} / (pi (1 - e^{-4 pi})), pinned by high-precision evaluation
  CHECK(discretization_bound(0.5, 1.0, 1.0) ==
        doctest::Approx(0.0011888551127142241).epsilon(1e-13));
  CHECK(discretization_bound(0.25, 1.0, 1.0) < discretization_bound(0.5, 1.0, 1.0));
  CHECK(discretization_bound(0.5, 1.0, 1.0) < discretization_bound(1.0, 1.0, 1.0));
  CHECK_THROWS_AS(discretization_bound(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(discretization_bound(0.5, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("lambda_bound_de values") {
  // alpha = beta = 1, K = 1: the bound approaches 2^3 as d -> 0
  CHECK(lambda_bound_de({1.0, 1.0, 1e-8, 1.0}) == doctest::Approx(8.0).epsilon(1e-6));
  CHECK(lambda_bound_de({0.5, 0.5, 0.785, 1.0}) ==
        doctest::Approx(25.447564321828142).epsilon(1e-13));
  double prev = 0.0;
  for (double d : {0.2, 0.6, 1.0, 1.4}) {
    const double v = lambda_bound_de({0.5, 0.5, d, 1.0});
    CHECK(v > prev);
    CHECK(std::isfinite(v));
    prev = v;
  }
  CHECK_THROWS_AS(lambda_bound_de({1.0, 1.0, kPi / 2, 1.0}), std::domain_error);
  CHECK_THROWS_AS(lambda_bound_de({1.0, 1.0, 1.6, 1.0}), std::domain_error);
}

TEST_CASE("rate_curve shapes") {
  const AnalyticityParams se{0.5, 0.5, 3.14};
  // SE: log rate scales as sqrt(n), so quadrupling n doubles it
  const double r1 = std::log(rate_curve(Family::SE, se, 10));
  const double r4 = std::log(rate_curve(Family::SE, se, 40));
  CHECK(r4 / r1 == doctest::Approx(2.0).epsilon(1e-12));

  const AnalyticityParams de{0.5, 0.5, 1.57};
  CHECK(rate_curve(Family::DE, de, 50) ==
        doctest::Approx(2.3514196832710434e-19).epsilon(1e-12));
  // DE beats SE at the problem-1 parameter budget
  CHECK(rate_curve(Family::DE, de, 50) < rate_curve(Family::SE, se, 50));
}

TEST_CASE("rate_curve prefactors") {
  const AnalyticityParams de{0.5, 0.5, 1.57};
  const double base = rate_curve(Family::DE, de, 30);
  CHECK(rate_curve(Family::DE, de, 30, RatePrefactor::sqrt_n) ==
        doctest::Approx(std::sqrt(30.0) * base).epsilon(1e-15));
  CHECK(rate_curve(Family::DE, de, 30, RatePrefactor::log_over_n) ==
        doctest::Approx(std::log(2 * 1.57 * 30 / 0.5) / 30 * base).epsilon(1e-15));
}

TEST_CASE("bounds stay positive and finite on their domains") {
  for (double h : {0.05, 0.3, 1.0, 2.0}) {
    for (double d : {0.1, 1.0, 3.0}) {
      const double v = discretization_bound(h, d, 1.0);
      CHECK(v > 0.0);
      CHECK(std::isfinite(v));
    }
  }
  for (double d : {0.05, 0.8, 1.5}) {
    const double v = lambda_bound_de({0.3, 0.9, d, 2.0});
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));
  }
}

TEST_CASE("discretization bound with the DE mesh decays superpolynomially") {
  const AnalyticityParams ap{0.5, 0.5, 1.57};
  const double b40 = discretization_bound(select_h(Family::DE, ap, 40), ap.d, 1.0);
  const double b80 = discretization_bound(select_h(Family::DE, ap, 80), ap.d, 1.0);
  CHECK(b80 / b40 < std::pow(0.5, 4));
}

TEST_SUITE_END();
