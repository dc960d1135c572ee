// Command-line front end: evaluate indefinite integrals of the built-in
// benchmark problems, run convergence sweeps to CSV, compare formulas at a
// target accuracy, and tabulate the theoretical error-bound expressions.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sincint/bench.hpp"
#include "sincint/bounds.hpp"
#include "sincint/pointwise.hpp"

namespace {

using namespace sincint;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// "a:b:step" (inclusive) or a single integer.
std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    out.push_back(std::stoi(text));
    return out;
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw CLI::ValidationError("--n-list", "expected a:b:step");
  const int a = std::stoi(text.substr(0, c1));
  const int b = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
  const int step = std::stoi(text.substr(c2 + 1));
  if (step < 1 || b < a) throw CLI::ValidationError("--n-list", "need a <= b and step >= 1");
  for (int n = a; n <= b; n += step) out.push_back(n);
  return out;
}

LeftBoundary parse_left(const std::string& s) {
  if (s == "corrected") return LeftBoundary::corrected;
  if (s == "plain-sinc") return LeftBoundary::plain_sinc;
  throw CLI::ValidationError("--left-boundary", "expected corrected or plain-sinc");
}

struct Options {
  std::vector<std::string> formulas;
  std::vector<int> problems;
  int n = 0;
  std::string n_list;
  int points = 1000;
  std::vector<double> xs;
  int order = 1;
  std::string left = "corrected";
  std::string output;
  std::string plot_script;
  bool bounds_overlay = false;
  double tol = 1e-8;
  int n_max = 150;
  // bounds command
  std::string family = "de";
  double alpha = 1.0, beta = 1.0, d = 1.0, K = 1.0;
  double lambda = -1.0;  // < 0: derive from lambda_bound_de for DE
};

int cmd_integrate(const Options& o) {
  if (o.formulas.size() != 1) {
    std::cerr << "integrate: exactly one --formula required\n";
    return 2;
  }
  const FormulaId formula = parse_formula(o.formulas[0]);
  const Problem p = builtin_problem(o.problems.at(0));
  const BenchOptions bopt{o.points, o.order, parse_left(o.left), 3};
  std::vector<double> xs = o.xs;
  if (xs.empty()) xs = evaluation_points(o.points);

  const Family fam = formula_family(formula);
  const Transform t(fam);
  const AnalyticityParams& ap = fam == Family::SE ? p.ap_se : p.ap_de;
  const GridParams grid = make_grid(fam, ap, o.n, formula_symmetric(formula));

  std::function<double(double)> eval;
  std::shared_ptr<SampledIntegrand> s;
  std::shared_ptr<DoubleSumEvaluator> e2;
  std::shared_ptr<MatrixFormEvaluator> e3;
  switch (formula) {
    case FormulaId::SE1:
    case FormulaId::DE1:
      s = std::make_shared<SampledIntegrand>(sample(p.integrand, t, grid));
      eval = [s](double x) { return indef_basis(*s, x); };
      break;
    case FormulaId::SE2:
    case FormulaId::DE2:
      e2 = std::make_shared<DoubleSumEvaluator>(sample(p.integrand, t, grid));
      eval = [e2](double x) { return (*e2)(x); };
      break;
    default:
      e3 = std::make_shared<MatrixFormEvaluator>(p.integrand, t, grid, bopt.order, bopt.left);
      eval = [e3](double x) { return (*e3)(x); };
      break;
  }

  std::printf("x,approx,exact,abs_error\n");
  for (double x : xs) {
    const double approx = eval(x);
    if (bopt.order == 1) {
      const double exact = p.exact(x);
      std::printf("%s,%s,%s,%s\n", fmt17(x).c_str(), fmt17(approx).c_str(), fmt17(exact).c_str(),
                  fmt17(std::abs(approx - exact)).c_str());
    } else {
      // no closed form is carried for repeated integrals of the built-ins
      std::printf("%s,%s,,\n", fmt17(x).c_str(), fmt17(approx).c_str());
    }
  }
  return 0;
}

void write_plot_script(const std::string& path, const std::string& csv,
                       const std::vector<std::string>& formulas) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write plot script '" + path + "'");
  out << "# gnuplot script; expects the CSV produced alongside it\n";
  out << "set datafile separator ','\n";
  out << "set logscale y\n";
  out << "set xlabel 'n'\n";
  out << "set ylabel 'max error'\n";
  out << "set key top right\n";
  out << "plot ";
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (i) out << ", \\\n     ";
    out << "'" << csv << "' using 3:(strcol(1) eq '" << formulas[i]
        << "' ? $7 : 1/0) with linespoints title '" << formulas[i] << "'";
  }
  out << "\n# error vs time: replace 'using 3:' with 'using 8:'\n";
}

int cmd_sweep(const Options& o) {
  if (o.formulas.empty()) {
    std::cerr << "sweep: at least one --formula required\n";
    return 2;
  }
  const std::vector<int> ns = parse_n_list(o.n_list.empty() ? std::to_string(o.n) : o.n_list);
  const Problem p = builtin_problem(o.problems.at(0));
  const BenchOptions bopt{o.points, o.order, parse_left(o.left), 3};

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      std::cerr << "sweep: cannot open output path '" << o.output << "'\n";
      return 2;
    }
    out = &file;
  }

  *out << "formula,problem,n,h,M,N,max_error,elapsed_seconds";
  if (o.bounds_overlay) *out << ",rate_curve";
  *out << "\n";
  for (const std::string& fname : o.formulas) {
    const FormulaId formula = parse_formula(fname);
    const auto records = sweep(formula, p, ns, bopt);
    const Family fam = formula_family(formula);
    const AnalyticityParams& ap = fam == Family::SE ? p.ap_se : p.ap_de;
    for (const auto& r : records) {
      *out << formula_name(r.formula) << ',' << r.problem << ',' << r.n << ',' << fmt17(r.h)
           << ',' << r.M << ',' << r.N << ',' << fmt17(r.max_error) << ','
           << fmt17(r.elapsed_seconds);
      if (o.bounds_overlay) *out << ',' << fmt17(rate_curve(fam, ap, r.n));
      *out << "\n";
    }
  }
  if (!o.plot_script.empty())
    write_plot_script(o.plot_script, o.output.empty() ? "sweep.csv" : o.output, o.formulas);
  return 0;
}

int cmd_compare(const Options& o) {
  std::vector<std::string> formulas = o.formulas;
  if (formulas.empty()) formulas = {"se1", "se2", "se3", "de1", "de2", "de3"};
  std::vector<int> problems = o.problems;
  if (problems.empty()) problems = {1, 2, 3, 4};
  const BenchOptions bopt{o.points, o.order, parse_left(o.left), 3};

  std::printf("# smallest n with max_error <= %s (n <= %d; '-' if never)\n", fmt17(o.tol).c_str(),
              o.n_max);
  std::printf("problem,formula,n,max_error\n");
  for (int pid : problems) {
    const Problem p = builtin_problem(pid);
    for (const std::string& fname : formulas) {
      const FormulaId formula = parse_formula(fname);
      int found = -1;
      double err = 0.0;
      for (int n = 2; n <= o.n_max; ++n) {
        err = max_error(formula, p, n, bopt);
        if (err <= o.tol) {
          found = n;
          break;
        }
      }
      if (found > 0)
        std::printf("%d,%s,%d,%s\n", pid, fname.c_str(), found, fmt17(err).c_str());
      else
        std::printf("%d,%s,-,\n", pid, fname.c_str());
    }
  }
  return 0;
}

int cmd_bounds(const Options& o) {
  const Family fam = o.family == "se" ? Family::SE : Family::DE;
  const AnalyticityParams ap{o.alpha, o.beta, o.d, o.K};
  const std::vector<int> ns = parse_n_list(o.n_list.empty() ? std::to_string(o.n) : o.n_list);
  double lambda = o.lambda;
  if (lambda < 0.0) {
    if (fam == Family::DE) {
      lambda = lambda_bound_de(ap);
      std::printf("# lambda from lambda_bound_de: %s\n", fmt17(lambda).c_str());
    } else {
      lambda = 1.0;
      std::printf("# lambda not supplied; using 1\n");
    }
  }
  std::printf("n,h,rate_curve,discretization_bound\n");
  for (int n : ns) {
    const double h = select_h(fam, ap, n);
    std::printf("%d,%s,%s,%s\n", n, fmt17(h).c_str(), fmt17(rate_curve(fam, ap, n)).c_str(),
                fmt17(discretization_bound(h, ap.d, lambda)).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sinc-based numerical indefinite integration on (-1, 1)"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* cmd, bool needs_problem) {
    cmd->add_option("--formula", o.formulas, "formula id: se1, se2, se3, de1, de2, de3");
    auto* prob = cmd->add_option("--problem", o.problems, "built-in problem id (1..4)");
    if (needs_problem) prob->required();
    cmd->add_option("--points", o.points, "number of evaluation points")->default_val(1000);
    cmd->add_option("--order", o.order, "matrix-form integration order")->default_val(1);
    cmd->add_option("--left-boundary", o.left, "corrected | plain-sinc")
        ->default_val("corrected");
  };

  auto* integrate = app.add_subcommand("integrate", "evaluate one formula at given points");
  add_common(integrate, true);
  integrate->add_option("--n", o.n, "discretization parameter n")->required();
  integrate->add_option("--x", o.xs, "evaluation point(s) in (-1, 1); default: the point grid");

  auto* sw = app.add_subcommand("sweep", "convergence sweep to CSV");
  add_common(sw, true);
  sw->add_option("--n", o.n, "single n");
  sw->add_option("--n-list", o.n_list, "a:b:step (inclusive)");
  sw->add_option("--output", o.output, "CSV output path (default: stdout)");
  sw->add_option("--plot-script", o.plot_script, "write a gnuplot script to this path");
  sw->add_flag("--bounds-overlay", o.bounds_overlay, "append a rate_curve column");

  auto* cmp = app.add_subcommand("compare", "smallest n reaching a target accuracy");
  add_common(cmp, false);
  cmp->add_option("--tol", o.tol, "target accuracy")->default_val(1e-8);
  cmp->add_option("--n-max", o.n_max, "search limit")->default_val(150);

  auto* bd = app.add_subcommand("bounds", "tabulate theoretical error-bound expressions");
  bd->add_option("--family", o.family, "se | de")->default_val("de");
  bd->add_option("--alpha", o.alpha, "endpoint exponent alpha")->default_val(1.0);
  bd->add_option("--beta", o.beta, "endpoint exponent beta")->default_val(1.0);
  bd->add_option("--d", o.d, "strip half-width d")->required();
  bd->add_option("--k", o.K, "bound constant K")->default_val(1.0);
  bd->add_option("--lambda", o.lambda, "Lambda(f, d); derived via lambda_bound_de if omitted");
  bd->add_option("--n", o.n, "single n");
  bd->add_option("--n-list", o.n_list, "a:b:step (inclusive)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (integrate->parsed()) return cmd_integrate(o);
    if (sw->parsed()) return cmd_sweep(o);
    if (cmp->parsed()) return cmd_compare(o);
    if (bd->parsed()) return cmd_bounds(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
