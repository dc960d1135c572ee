#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sincint/integrand.hpp"
#include "sincint/matrix_form.hpp"
#include "sincint/params.hpp"

namespace sincint {

enum class FormulaId { SE1, SE2, SE3, DE1, DE2, DE3 };

Family formula_family(FormulaId id);
bool formula_symmetric(FormulaId id);  // the double-sum formulas need M = N = n
std::string formula_name(FormulaId id);
FormulaId parse_formula(const std::string& name);  // "se1" .. "de3"

/// A benchmark integrand with its exact antiderivative (from -1) and the
/// analyticity parameters for each transformation family.
struct Problem {
  int id;
  Integrand integrand;
  std::function<double(double)> exact;
  AnalyticityParams ap_se;
  AnalyticityParams ap_de;
};

/// The four built-in problems:
///   1: 1/(pi sqrt(1-s^2))             -> (arcsin x + pi/2)/pi
///   2: log((1+s)/(1-s))/(4 log 2)     -> ((1+x)log(1+x)+(1-x)log(1-x)-2log2)/(4 log 2)
///   3: 2/(pi (1+s^2))                 -> 1/2 + (2/pi) arctan x
///   4: oscillatory with sqrt factor   -> (1-x^2) sqrt(cos(4 artanh x) + cosh pi)
Problem builtin_problem(int id);

/// One convergence measurement.
struct ConvergenceRecord {
  FormulaId formula;
  int problem;
  int n;
  double h;
  int M;
  int N;
  double max_error;
  double elapsed_seconds;
};

struct BenchOptions {
  int points = 1000;                            // evaluation points per measurement
  int order = 1;                                // matrix-form integration order
  LeftBoundary left = LeftBoundary::corrected;  // matrix-form left boundary
  int repetitions = 3;                          // timing repetitions (median)
};

/// Equally spaced, strictly interior, exactly symmetric about 0:
/// x_k = -1 + 2k/(count+1) = (2k - (count+1))/(count+1), k = 1..count.
std::vector<double> evaluation_points(int count);

/// max_k |approx(x_k) - exact(x_k)| over the evaluation points.
/// Deterministic: fixed summation order, no parallelism.
double max_error(FormulaId formula, const Problem& p, int n, const BenchOptions& opt = {});

/// Times build + sample + precompute + all point evaluations; the reported
/// elapsed time is the median over opt.repetitions runs.
ConvergenceRecord measure(FormulaId formula, const Problem& p, int n,
                          const BenchOptions& opt = {});

/// One record per n; n_list must be strictly increasing.
std::vector<ConvergenceRecord> sweep(FormulaId formula, const Problem& p,
                                     std::span<const int> n_list, const BenchOptions& opt = {});

}  // namespace sincint
