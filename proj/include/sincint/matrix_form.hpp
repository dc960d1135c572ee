#pragma once

#include <span>
#include <vector>

#include "sincint/integrand.hpp"
#include "sincint/params.hpp"
#include "sincint/transform.hpp"

namespace sincint {

/// The m x m indefinite-integration matrix with entries
/// delta_{ij} = 1/2 + sigma_{i-j}. Toeplitz; entry(i,j) + entry(j,i) = 1
/// holds exactly as stored.
class IndefMatrix {
 public:
  explicit IndefMatrix(int m);

  int order() const { return m_; }
  double entry(int i, int j) const { return dense_[static_cast<std::size_t>(i) * m_ + j]; }

  void multiply(std::span<const double> v, std::span<double> out) const;
  std::vector<double> multiply(std::span<const double> v) const;

 private:
  int m_;
  std::vector<double> dense_;  // row-major
};

/// A_m = h I^(-1)_m D_m with D_m = diag(T'(jh)). Stores the constituents;
/// apply() never forms A^order densely.
class IntegrationOperator {
 public:
  IntegrationOperator(const Transform& t, const GridParams& grid);

  const GridParams& grid() const { return grid_; }
  const Transform& transform() const { return transform_; }
  const IndefMatrix& iminus() const { return iminus_; }
  std::span<const double> diag() const { return diag_; }

  /// A^order v via repeated matrix-vector products.
  std::vector<double> apply(std::span<const double> v, int order = 1) const;

 private:
  Transform transform_;
  GridParams grid_;
  IndefMatrix iminus_;
  std::vector<double> diag_;
};

enum class LeftBoundary { corrected, plain_sinc };

/// Interpolation weights omega_i(x), i = -M..N: sinc translates in the
/// interior, eta-corrected members at the two boundaries. Cardinal at the
/// nodes: omega_i(T(jh)) = delta_ij. `plain_sinc` replaces the corrected
/// left member by the bare sinc term.
std::vector<double> omega_weights(const Transform& t, const GridParams& grid, double x,
                                  LeftBoundary left = LeftBoundary::corrected);

/// Same weights parameterized by the transformed coordinate u = T^{-1}(x).
/// Needed when x itself would round to +-1 (extreme DE nodes).
std::vector<double> omega_weights_at(const Transform& t, const GridParams& grid, double u,
                                     LeftBoundary left = LeftBoundary::corrected);

/// Matrix-vector formula (SE3/DE3): omega(x) . A^order f, with the
/// coefficient vector A^order f computed once at construction.
class MatrixFormEvaluator {
 public:
  MatrixFormEvaluator(const Integrand& f, const Transform& t, const GridParams& grid,
                      int order = 1, LeftBoundary left = LeftBoundary::corrected);

  double operator()(double x) const;

  /// A^order f at the nodes.
  const std::vector<double>& coefficients() const { return coeff_; }

 private:
  Transform transform_;
  GridParams grid_;
  LeftBoundary left_;
  std::vector<double> coeff_;
  std::vector<double> eta_nodes_;        // eta(T(kh))
  std::vector<double> one_minus_nodes_;  // 1 - eta(T(kh))
};

/// One-shot wrapper; rebuilds the cached coefficient vector on every call.
double indef_matrix(const Integrand& f, const Transform& t, const GridParams& grid, double x,
                    int order = 1, LeftBoundary left = LeftBoundary::corrected);

}  // namespace sincint
