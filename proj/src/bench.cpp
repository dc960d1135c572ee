#include "sincint/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "sincint/pointwise.hpp"

namespace sincint {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPiMinus = 3.14;   // slightly-smaller-than-pi strip parameter
constexpr double kOneMinus = 0.99;  // slightly-smaller-than-1 exponent

}  // namespace

Family formula_family(FormulaId id) {
  switch (id) {
    case FormulaId::SE1:
    case FormulaId::SE2:
    case FormulaId::SE3:
      return Family::SE;
    default:
      return Family::DE;
  }
}

bool formula_symmetric(FormulaId id) {
  return id == FormulaId::SE2 || id == FormulaId::DE2;
}

std::string formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::SE1: return "se1";
    case FormulaId::SE2: return "se2";
    case FormulaId::SE3: return "se3";
    case FormulaId::DE1: return "de1";
    case FormulaId::DE2: return "de2";
    case FormulaId::DE3: return "de3";
  }
  throw std::invalid_argument("formula_name: bad id");
}

FormulaId parse_formula(const std::string& name) {
  if (name == "se1") return FormulaId::SE1;
  if (name == "se2") return FormulaId::SE2;
  if (name == "se3") return FormulaId::SE3;
  if (name == "de1") return FormulaId::DE1;
  if (name == "de2") return FormulaId::DE2;
  if (name == "de3") return FormulaId::DE3;
  throw std::invalid_argument("unknown formula '" + name + "' (expected se1..se3, de1..de3)");
}

Problem builtin_problem(int id) {
  switch (id) {
    case 1:
      return {1,
              Integrand::endpoint_aware([](double, double lo, double hi) {
                return 1.0 / (kPi * std::sqrt(lo * hi));
              }),
              [](double x) { return (std::asin(x) + kPi / 2) / kPi; },
              {0.5, 0.5, kPiMinus, 1.0},
              {0.5, 0.5, kPiMinus / 2, 1.0}};
    case 2: {
      const double c = 4.0 * std::log(2.0);
      return {2,
              Integrand::endpoint_aware([c](double, double lo, double hi) {
                return (std::log(lo) - std::log(hi)) / c;
              }),
              [c](double x) {
                const double lo = 1.0 + x, hi = 1.0 - x;
                const double a = lo > 0.0 ? lo * std::log(lo) : 0.0;
                const double b = hi > 0.0 ? hi * std::log(hi) : 0.0;
                return (a + b - 2.0 * std::log(2.0)) / c;
              },
              {kOneMinus, kOneMinus, kPiMinus, 1.0},
              {kOneMinus, kOneMinus, kPiMinus / 2, 1.0}};
    }
    case 3:
      return {3,
              Integrand([](double x) { return 2.0 / (kPi * (1.0 + x * x)); }),
              [](double x) { return 0.5 + 2.0 / kPi * std::atan(x); },
              {1.0, 1.0, kPiMinus / 2, 1.0},
              {1.0, 1.0, kPiMinus / 6, 1.0}};
    case 4:
      // 4 artanh x = 2 (log(1+x) - log(1-x)), through the gaps
      return {4,
              Integrand::endpoint_aware([](double x, double lo, double hi) {
                const double a = 2.0 * (std::log(lo) - std::log(hi));
                const double c = std::cos(a) + std::cosh(kPi);
                return -2.0 * (x * c + std::sin(a)) / std::sqrt(c);
              }),
              [](double x) {
                const double q = (1.0 - x) * (1.0 + x);
                if (q <= 0.0) return 0.0;  // vanishes at both endpoints
                return q * std::sqrt(std::cos(4.0 * std::atanh(x)) + std::cosh(kPi));
              },
              {1.0, 1.0, kPiMinus / 2, 1.0},
              {1.0, 1.0, kPiMinus / 6, 1.0}};
    default:
      throw std::invalid_argument("builtin_problem: id must be 1..4");
  }
}

std::vector<double> evaluation_points(int count) {
  if (count < 1) throw std::invalid_argument("evaluation_points: count must be >= 1");
  std::vector<double> xs(count);
  const double denom = count + 1;
  for (int k = 1; k <= count; ++k) xs[k - 1] = (2.0 * k - denom) / denom;
  return xs;
}

namespace {

// A formula instance ready to evaluate at arbitrary x; building it performs
// all sampling and precomputation.
struct Evaluation {
  GridParams grid;
  std::function<double(double)> eval;
};

Evaluation build(FormulaId formula, const Problem& p, int n, const BenchOptions& opt) {
  const Family fam = formula_family(formula);
  const Transform t(fam);
  const AnalyticityParams& ap = fam == Family::SE ? p.ap_se : p.ap_de;
  const GridParams grid = make_grid(fam, ap, n, formula_symmetric(formula));
  switch (formula) {
    case FormulaId::SE1:
    case FormulaId::DE1: {
      auto s = std::make_shared<SampledIntegrand>(sample(p.integrand, t, grid));
      return {grid, [s](double x) { return indef_basis(*s, x); }};
    }
    case FormulaId::SE2:
    case FormulaId::DE2: {
      auto ev = std::make_shared<DoubleSumEvaluator>(sample(p.integrand, t, grid));
      return {grid, [ev](double x) { return (*ev)(x); }};
    }
    default: {
      auto ev = std::make_shared<MatrixFormEvaluator>(p.integrand, t, grid, opt.order, opt.left);
      return {grid, [ev](double x) { return (*ev)(x); }};
    }
  }
}

}  // namespace

double max_error(FormulaId formula, const Problem& p, int n, const BenchOptions& opt) {
  const std::vector<double> xs = evaluation_points(opt.points);
  const Evaluation ev = build(formula, p, n, opt);
  double err = 0.0;
  for (double x : xs) err = std::max(err, std::abs(ev.eval(x) - p.exact(x)));
  return err;
}

ConvergenceRecord measure(FormulaId formula, const Problem& p, int n, const BenchOptions& opt) {
  using clock = std::chrono::steady_clock;
  const std::vector<double> xs = evaluation_points(opt.points);
  std::vector<double> approx(xs.size());
  std::vector<double> times;
  GridParams grid;
  const int reps = std::max(1, opt.repetitions);
  for (int rep = 0; rep < reps; ++rep) {
    const auto t0 = clock::now();
    const Evaluation ev = build(formula, p, n, opt);
    for (std::size_t i = 0; i < xs.size(); ++i) approx[i] = ev.eval(xs[i]);
    const auto t1 = clock::now();
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
    grid = ev.grid;
  }
  double err = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    err = std::max(err, std::abs(approx[i] - p.exact(xs[i])));
  std::sort(times.begin(), times.end());
  return {formula, p.id, n, grid.h, grid.M, grid.N, err, times[times.size() / 2]};
}

std::vector<ConvergenceRecord> sweep(FormulaId formula, const Problem& p,
                                     std::span<const int> n_list, const BenchOptions& opt) {
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("sweep: n_list must be strictly increasing");
  std::vector<ConvergenceRecord> records;
  records.reserve(n_list.size());
  for (int n : n_list) records.push_back(measure(formula, p, n, opt));
  return records;
}

}  // namespace sincint
