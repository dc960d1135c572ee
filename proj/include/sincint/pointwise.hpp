#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sincint/integrand.hpp"
#include "sincint/params.hpp"
#include "sincint/transform.hpp"

namespace sincint {

/// Thrown when an integrand produces a non-finite value at a grid node.
class SampleError : public std::runtime_error {
 public:
  SampleError(int node, const std::string& what) : std::runtime_error(what), node_(node) {}
  int node() const { return node_; }

 private:
  int node_;
};

/// Node data shared by all formulas: F_j = f(T(jh)) T'(jh) for j = -M..N.
struct SampledIntegrand {
  GridParams grid;
  Transform transform;
  std::vector<double> values;   // F_j, all finite
  std::vector<double> weights;  // T'(jh)
};

SampledIntegrand sample(const Integrand& f, const Transform& t, const GridParams& grid);

/// Basis-function formula (SE1/DE1):
///   sum_{j=-M}^{N} F_j J(j, h)(T^{-1}(x)).
double indef_basis(const SampledIntegrand& s, double x);

/// Trapezoidal value of the total integral, I* = h sum_j F_j.
/// Requires a symmetric grid (M == N).
double trapezoid_total(const SampledIntegrand& s);

/// Double-sum formula (SE2/DE2) with the inner j-sums precomputed once per
/// grid; each evaluation then costs one sinc per node. Immutable after
/// construction, safe to evaluate from several threads.
class DoubleSumEvaluator {
 public:
  explicit DoubleSumEvaluator(const SampledIntegrand& s);

  double operator()(double x) const;

  /// I* = h sum_j F_j.
  double total() const { return total_; }

  /// Cached coefficients c_i = h sum_j delta_{ij} (F_j - I* T'(jh) / 2).
  const std::vector<double>& coefficients() const { return coeff_; }

 private:
  Transform transform_;
  GridParams grid_;
  std::vector<double> coeff_;
  double total_ = 0.0;
};

/// One-shot convenience wrapper around DoubleSumEvaluator; rebuilds the
/// O(m^2) inner sums on every call.
double indef_doublesum(const SampledIntegrand& s, double x);

}  // namespace sincint
