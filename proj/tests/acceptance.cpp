// Acceptance suite: ten numbered criteria, each printing one PASS/FAIL line.
// Every tolerance is pinned in code. Run via ctest or directly; a doctest
// test-case filter (e.g. --test-case='*criterion 5:*') selects one criterion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sincint/bench.hpp"
#include "sincint/bounds.hpp"
#include "sincint/pointwise.hpp"
#include "sincint/special.hpp"

using namespace sincint;

namespace {

constexpr double kPi = 3.14159265358979323846;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(ok, "criterion ", criterion, ": ", detail);
}

double doublesum_naive(const SampledIntegrand& s, double x) {
  const GridParams& g = s.grid;
  const int n = g.N;
  double istar = 0.0;
  for (double v : s.values) istar += v;
  istar *= g.h;
  const double u = s.transform.inverse(x);
  double acc = 0.0;
  for (int i = -n; i <= n; ++i) {
    double inner = 0.0;
    for (int j = -n; j <= n; ++j)
      inner += (s.values[j + n] - 0.5 * istar * s.weights[j + n]) * (0.5 + sigma(i - j));
    acc += inner * sinc((u - i * g.h) / g.h);
  }
  return g.h * acc + istar * eta(x);
}

double matrixform_naive(const Integrand& f, const Transform& t, const GridParams& g, double x) {
  const std::vector<double> w = omega_weights(t, g, x);
  double acc = 0.0;
  for (int i = -g.M; i <= g.N; ++i) {
    double inner = 0.0;
    for (int j = -g.M; j <= g.N; ++j) {
      const double u = j * g.h;
      const EndpointGaps gap = t.endpoint_gaps(u);
      inner += (0.5 + sigma(i - j)) * f(t.forward(u), gap.lower, gap.upper) * t.derivative(u);
    }
    acc += g.h * inner * w[i + g.M];
  }
  return acc;
}

}  // namespace

TEST_CASE("criterion 1: sine-integral accuracy against the quadrature oracle") {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double x = -60.0 + 120.0 * i / 199.0;
    worst = std::fmax(worst, std::abs(sine_integral(x) - oracles::sine_integral(x)));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "worst |Si - oracle| = %.3e over 200 points in [-60, 60]",
                worst);
  report(1, worst <= 1e-13, buf);
}

TEST_CASE("criterion 2: omega cardinality at the nodes") {
  double worst = 0.0;
  for (Family fam : {Family::SE, Family::DE}) {
    const Transform t(fam);
    const double d = fam == Family::SE ? 3.14 : 1.57;
    for (int n : {4, 8, 16}) {
      const GridParams g = make_grid(fam, {0.5, 0.5, d}, n);
      for (int j = -g.M; j <= g.N; ++j) {
        const auto w = omega_weights_at(t, g, j * g.h);
        for (int i = -g.M; i <= g.N; ++i)
          worst = std::fmax(worst, std::abs(w[i + g.M] - (i == j ? 1.0 : 0.0)));
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max |omega_i(T(jh)) - delta_ij| = %.3e, both families", worst);
  report(2, worst < 1e-12, buf);
}

TEST_CASE("criterion 3: cached paths equal the literal brute-force sums") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> xd(-0.99, 0.99);
  const Problem p = builtin_problem(1);
  const Transform t(Family::DE);
  double worst = 0.0;
  for (int n : {4, 8}) {
    const GridParams g = make_grid(Family::DE, p.ap_de, n);
    const MatrixFormEvaluator mf(p.integrand, t, g);
    const GridParams gs = make_grid(Family::DE, p.ap_de, n, true);
    const auto s = sample(p.integrand, t, gs);
    const DoubleSumEvaluator ds(s);
    for (int i = 0; i < 20; ++i) {
      const double x = xd(rng);
      const double a = mf(x), b = matrixform_naive(p.integrand, t, g, x);
      worst = std::fmax(worst, std::abs(a - b) / std::fmax(std::fmax(std::abs(a), std::abs(b)),
                                                           1e-3));
      const double c = ds(x), d = doublesum_naive(s, x);
      worst = std::fmax(worst, std::abs(c - d) / std::fmax(std::fmax(std::abs(c), std::abs(d)),
                                                           1e-3));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "worst relative gap cached-vs-naive = %.3e (n in {4, 8})",
                worst);
  report(3, worst <= 1e-13, buf);
}

TEST_CASE("criterion 4: exact center values of problems 1 and 3") {
  double worst = 0.0;
  for (int pid : {1, 3}) {
    const Problem p = builtin_problem(pid);
    const Transform t(Family::DE);
    const GridParams g1 = make_grid(Family::DE, p.ap_de, 40);
    const GridParams g2 = make_grid(Family::DE, p.ap_de, 40, true);
    worst = std::fmax(worst, std::abs(indef_basis(sample(p.integrand, t, g1), 0.0) - 0.5));
    worst = std::fmax(worst, std::abs(indef_doublesum(sample(p.integrand, t, g2), 0.0) - 0.5));
    worst = std::fmax(worst, std::abs(indef_matrix(p.integrand, t, g1, 0.0) - 0.5));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "worst |value(0) - 1/2| = %.3e across DE1/DE2/DE3, n = 40",
                worst);
  report(4, worst <= 1e-9, buf);
}

TEST_CASE("criterion 5: DE errors at least 1000x below SE errors at n = 32") {
  bool ok = true;
  std::string detail;
  for (int pid : {1, 2, 3}) {
    const Problem p = builtin_problem(pid);
    double worst_de = 0.0, best_se = 1e300;
    for (FormulaId f : {FormulaId::DE1, FormulaId::DE2, FormulaId::DE3})
      worst_de = std::fmax(worst_de, max_error(f, p, 32));
    for (FormulaId f : {FormulaId::SE1, FormulaId::SE2, FormulaId::SE3})
      best_se = std::fmin(best_se, max_error(f, p, 32));
    const double ratio = best_se / worst_de;
    ok = ok && ratio >= 1e3;
    char buf[64];
    std::snprintf(buf, sizeof buf, "P%d ratio %.2e%s", pid, ratio, pid < 3 ? ", " : "");
    detail += buf;
  }
  report(5, ok, "min SE error / max DE error: " + detail + " (need >= 1e3)");
}

TEST_CASE("criterion 6: DE rate slope within 40% of -pi*d on problem 1") {
  const Problem p = builtin_problem(1);
  const double d = 1.57, mu = 0.5;
  const std::vector<int> ns{10, 20, 30, 40, 50};
  bool ok = true;
  std::string detail;
  for (FormulaId f : {FormulaId::DE2, FormulaId::DE3}) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int n : ns) {
      const double xi = n / std::log(2 * d * n / mu);
      const double y = std::log(max_error(f, p, n));
      sx += xi;
      sy += y;
      sxx += xi * xi;
      sxy += xi * y;
    }
    const double k = ns.size();
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    const double ratio = slope / (-kPi * d);
    ok = ok && ratio >= 0.6 && ratio <= 1.4;
    char buf[80];
    std::snprintf(buf, sizeof buf, "%s slope %.3f (target %.3f), ", formula_name(f).c_str(),
                  slope, -kPi * d);
    detail += buf;
  }
  report(6, ok, detail + "ratio must lie in [0.6, 1.4]");
}

TEST_CASE("criterion 7: all six formulas converge on problem 4") {
  const Problem p = builtin_problem(4);
  bool ok = true;
  double worst_ratio = 1e300;
  for (FormulaId f : {FormulaId::SE1, FormulaId::SE2, FormulaId::SE3, FormulaId::DE1,
                      FormulaId::DE2, FormulaId::DE3}) {
    const double e20 = max_error(f, p, 20);
    const double e80 = max_error(f, p, 80);
    ok = ok && std::isfinite(e80) && 100.0 * e80 <= e20;
    worst_ratio = std::fmin(worst_ratio, e20 / e80);
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "min error(20)/error(80) = %.2e across six formulas",
                worst_ratio);
  report(7, ok, buf);
}

TEST_CASE("criterion 8: order-2 repeated integration on problem 3") {
  const auto G = [](double x) {
    const double base = x / 2 + (2 / kPi) * (x * std::atan(x) - 0.5 * std::log1p(x * x));
    const double at_m1 = -0.5 + (2 / kPi) * (kPi / 4 - 0.5 * std::log(2.0));
    return base - at_m1;
  };
  const Problem p = builtin_problem(3);
  const Transform t(Family::DE);
  const GridParams g = make_grid(Family::DE, p.ap_de, 60);
  const MatrixFormEvaluator ev(p.integrand, t, g, 2);
  double worst = 0.0;
  for (double x : evaluation_points(1000)) worst = std::fmax(worst, std::abs(ev(x) - G(x)));
  char buf[128];
  std::snprintf(buf, sizeof buf, "max |DE3^2 - double antiderivative| = %.3e at n = 60", worst);
  report(8, worst <= 1e-8, buf);
}

TEST_CASE("criterion 9: bound evaluators match high-precision references") {
  const long double pi_l = 3.141592653589793238462643383279502884L;
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> hd(0.05, 2.0), dd(0.1, 3.0), ld(0.0, 10.0);
  std::uniform_real_distribution<double> ad(0.05, 1.0), kd(0.1, 10.0), dd2(0.05, 1.5);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double h = hd(rng), d = dd(rng), lam = ld(rng);
    const long double q = std::exp(-pi_l * d / h);
    const long double ref = 4.0L * h * q / (pi_l * d * (1.0L - q * q)) * lam;
    const double got = discretization_bound(h, d, lam);
    if (ref != 0.0L)
      worst = std::fmax(worst, std::abs(static_cast<double>((got - ref) / ref)));
  }
  for (int i = 0; i < 20; ++i) {
    const double a = ad(rng), b = ad(rng), d = dd2(rng), K = kd(rng);
    const long double ab = static_cast<long double>(a) + b;
    const long double mu = a < b ? a : b;
    const long double ref = std::pow(2.0L, ab + 1.0L) * K /
                            (mu * std::pow(std::cos(pi_l / 2 * std::sin((long double)d)), ab) *
                             std::cos((long double)d));
    const double got = lambda_bound_de({a, b, d, K});
    worst = std::fmax(worst, std::abs(static_cast<double>((got - ref) / ref)));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "worst relative deviation = %.3e over 2 x 20 tuples", worst);
  report(9, worst <= 1e-12, buf);
}

TEST_CASE("criterion 10: efficiency ordering at target accuracy 1e-8") {
  const double tol = 1e-8;
  bool ok = true;
  std::string detail;
  for (int pid : {1, 2, 3}) {
    const Problem p = builtin_problem(pid);
    auto min_n = [&](FormulaId f) {
      for (int n = 2; n <= 150; ++n)
        if (max_error(f, p, n) <= tol) return n;
      return -1;
    };
    BenchOptions opt;
    opt.repetitions = 5;
    auto timed = [&](FormulaId f) {
      const int n = min_n(f);
      REQUIRE(n > 0);
      (void)max_error(f, p, n);  // warm-up
      return measure(f, p, n, opt).elapsed_seconds;
    };
    const double t_se1 = timed(FormulaId::SE1);
    const double t_de1 = timed(FormulaId::DE1);
    const double t_de2 = timed(FormulaId::DE2);
    const double t_de3 = timed(FormulaId::DE3);
    const bool this_ok = t_de2 <= t_de3 && t_de3 <= t_se1 && t_de3 <= t_de1;
    ok = ok && this_ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "P%d de2 %.2ems de3 %.2ems de1 %.2ems se1 %.2ems%s", pid,
                  1e3 * t_de2, 1e3 * t_de3, 1e3 * t_de1, 1e3 * t_se1, pid < 3 ? "; " : "");
    detail += buf;
  }
  report(10, ok, detail);
}
