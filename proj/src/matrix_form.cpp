#include "sincint/matrix_form.hpp"

#include <cmath>
#include <stdexcept>

#include "sincint/pointwise.hpp"
#include "sincint/special.hpp"

namespace sincint {

IndefMatrix::IndefMatrix(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("IndefMatrix: order must be >= 1");
  // delta_k = 1/2 + sigma_k for k >= 0; the mirrored entry is formed as
  // 1 - delta_k, which is exact here (delta_k in [1/2, 1.09], Sterbenz) and
  // makes entry(i,j) + entry(j,i) = 1 hold without rounding.
  std::vector<double> delta(2 * m - 1);  // k = i - j, offset m - 1
  for (int k = 0; k < m; ++k) {
    const double d = 0.5 + sigma(k);
    delta[m - 1 + k] = d;
    delta[m - 1 - k] = 1.0 - d;
  }
  dense_.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      dense_[static_cast<std::size_t>(i) * m + j] = delta[m - 1 + i - j];
}

void IndefMatrix::multiply(std::span<const double> v, std::span<double> out) const {
  if (v.size() != static_cast<std::size_t>(m_) || out.size() != v.size())
    throw std::invalid_argument("IndefMatrix::multiply: size mismatch");
  for (int i = 0; i < m_; ++i) {
    const double* row = &dense_[static_cast<std::size_t>(i) * m_];
    double acc = 0.0;
    for (int j = 0; j < m_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
}

std::vector<double> IndefMatrix::multiply(std::span<const double> v) const {
  std::vector<double> out(v.size());
  multiply(v, out);
  return out;
}

IntegrationOperator::IntegrationOperator(const Transform& t, const GridParams& grid)
    : transform_(t), grid_(grid), iminus_(grid.m()) {
  diag_.resize(grid.m());
  for (int j = -grid.M; j <= grid.N; ++j) diag_[j + grid.M] = t.derivative(j * grid.h);
}

std::vector<double> IntegrationOperator::apply(std::span<const double> v, int order) const {
  const int m = grid_.m();
  if (v.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("IntegrationOperator::apply: vector length != m");
  if (order < 1) throw std::invalid_argument("IntegrationOperator::apply: order must be >= 1");
  std::vector<double> cur(v.begin(), v.end());
  std::vector<double> scaled(m), prod(m);
  for (int pass = 0; pass < order; ++pass) {
    for (int i = 0; i < m; ++i) scaled[i] = diag_[i] * cur[i];
    iminus_.multiply(scaled, prod);
    for (int i = 0; i < m; ++i) cur[i] = grid_.h * prod[i];
  }
  return cur;
}

namespace {

struct BoundaryNodes {
  std::vector<double> eta;        // eta(T(kh))
  std::vector<double> one_minus;  // 1 - eta(T(kh))
};

// Both sequences through the endpoint gaps, so the boundary corrections keep
// cancelling exactly at nodes where T(kh) has rounded to +-1.
BoundaryNodes boundary_nodes(const Transform& t, const GridParams& g) {
  BoundaryNodes nodes;
  nodes.eta.resize(g.m());
  nodes.one_minus.resize(g.m());
  for (int k = -g.M; k <= g.N; ++k) {
    const EndpointGaps gap = t.endpoint_gaps(k * g.h);
    nodes.eta[k + g.M] = 0.5 * gap.lower;
    nodes.one_minus[k + g.M] = 0.5 * gap.upper;
  }
  return nodes;
}

void check_grid(const GridParams& g) {
  if (g.M < 1 || g.N < 1 || !(g.h > 0.0))
    throw std::invalid_argument("matrix_form: grid needs M >= 1, N >= 1, h > 0");
}

}  // namespace

std::vector<double> omega_weights_at(const Transform& t, const GridParams& g, double u,
                                     LeftBoundary left) {
  check_grid(g);
  const BoundaryNodes nodes = boundary_nodes(t, g);
  const int m = g.m();
  std::vector<double> w(m);
  for (int i = -g.M; i <= g.N; ++i) w[i + g.M] = sinc((u - i * g.h) / g.h);

  const EndpointGaps gap = t.endpoint_gaps(u);
  const double eta_x = 0.5 * gap.lower;
  const double one_minus_eta_x = 0.5 * gap.upper;

  double right = eta_x;
  for (int k = 0; k < m - 1; ++k) right -= nodes.eta[k] * w[k];

  double left_val = w[0];
  if (left == LeftBoundary::corrected) {
    left_val = one_minus_eta_x;
    for (int k = 1; k < m; ++k) left_val -= nodes.one_minus[k] * w[k];
    left_val /= nodes.one_minus[0];
  }

  w[m - 1] = right / nodes.eta[m - 1];
  w[0] = left_val;
  return w;
}

std::vector<double> omega_weights(const Transform& t, const GridParams& g, double x,
                                  LeftBoundary left) {
  return omega_weights_at(t, g, t.inverse(x), left);
}

MatrixFormEvaluator::MatrixFormEvaluator(const Integrand& f, const Transform& t,
                                         const GridParams& grid, int order, LeftBoundary left)
    : transform_(t), grid_(grid), left_(left) {
  check_grid(grid);
  if (order < 1) throw std::invalid_argument("indef_matrix: order must be >= 1");
  const int m = grid.m();
  const SampledIntegrand s = sample(f, t, grid);
  const IndefMatrix iminus(m);
  // First application consumes the sampled products F_j = f T' directly;
  // higher orders multiply the (now smooth) iterate by D_m again.
  coeff_ = iminus.multiply(s.values);
  for (double& c : coeff_) c *= grid.h;
  std::vector<double> scaled(m), prod(m);
  for (int pass = 1; pass < order; ++pass) {
    for (int i = 0; i < m; ++i) scaled[i] = s.weights[i] * coeff_[i];
    iminus.multiply(scaled, prod);
    for (int i = 0; i < m; ++i) coeff_[i] = grid.h * prod[i];
  }
  BoundaryNodes nodes = boundary_nodes(t, grid);
  eta_nodes_ = std::move(nodes.eta);
  one_minus_nodes_ = std::move(nodes.one_minus);
}

double MatrixFormEvaluator::operator()(double x) const {
  const double u = transform_.inverse(x);
  const GridParams& g = grid_;
  const int m = g.m();
  const EndpointGaps gap = transform_.endpoint_gaps(u);

  // Single fused pass: one sinc per node plus the two boundary dot products.
  double interior = 0.0, dot_eta = 0.0, dot_one_minus = 0.0;
  double s_first = 0.0;
  for (int i = 0; i < m; ++i) {
    const double s = sinc((u - (i - g.M) * g.h) / g.h);
    if (i == 0)
      s_first = s;
    else if (i < m - 1)
      interior += coeff_[i] * s;
    if (i < m - 1) dot_eta += eta_nodes_[i] * s;
    if (i > 0) dot_one_minus += one_minus_nodes_[i] * s;
  }
  const double omega_last = (0.5 * gap.lower - dot_eta) / eta_nodes_[m - 1];
  const double omega_first = left_ == LeftBoundary::corrected
                                 ? (0.5 * gap.upper - dot_one_minus) / one_minus_nodes_[0]
                                 : s_first;
  return coeff_[0] * omega_first + interior + coeff_[m - 1] * omega_last;
}

double indef_matrix(const Integrand& f, const Transform& t, const GridParams& grid, double x,
                    int order, LeftBoundary left) {
  return MatrixFormEvaluator(f, t, grid, order, left)(x);
}

}  // namespace sincint
