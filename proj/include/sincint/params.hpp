#pragma once

#include <algorithm>
#include <utility>

#include "sincint/transform.hpp"

namespace sincint {

/// Analyticity data of an integrand f on (-1, 1):
/// |f(z)| <= K |z + 1|^(alpha-1) |z - 1|^(beta-1) on the transformed strip,
/// with strip half-width d (d < pi for SE, d < pi/2 for DE).
struct AnalyticityParams {
  double alpha = 1.0;
  double beta = 1.0;
  double d = 1.0;
  double K = 1.0;  // only the error-bound helpers read this

  double mu() const { return std::min(alpha, beta); }
};

/// Discretization produced by the mesh-selection rules.
struct GridParams {
  int n = 0;     // max{M, N}
  double h = 0;  // mesh size
  int M = 0;     // nodes j = -M..N
  int N = 0;

  int m() const { return M + N + 1; }
};

/// Mesh size: sqrt(pi d / (mu n)) for SE, log(2 d n / mu) / n for DE.
double select_h(Family family, const AnalyticityParams& ap, int n);

/// Truncation indices with max{M, N} = n:
///   SE, mu = alpha:  M = n, N = ceil((alpha/beta) n)      (mirrored otherwise)
///   DE, mu = alpha:  M = n, N = n - floor(log(beta/alpha) / h)
std::pair<int, int> select_mn(Family family, const AnalyticityParams& ap, int n, double h);

/// Composes select_h and select_mn. `symmetric` forces M = N = n, which the
/// double-sum formulas require.
GridParams make_grid(Family family, const AnalyticityParams& ap, int n, bool symmetric = false);

}  // namespace sincint
