#include "sincint/pointwise.hpp"

#include <cmath>

#include "sincint/matrix_form.hpp"
#include "sincint/special.hpp"

namespace sincint {
namespace {

// Below this, T'(jh) has decayed so far that f(T(jh)) T'(jh) is negligible
// for any integrand of the admissible class |f| <= K|1+s|^(a-1)|1-s|^(b-1).
// The f call is skipped entirely: evaluating it there can overflow once the
// endpoint gap goes subnormal, while the true product is < 1e-100.
constexpr double kDerivativeFloor = 1e-250;

}  // namespace

SampledIntegrand sample(const Integrand& f, const Transform& t, const GridParams& grid) {
  if (grid.M < 0 || grid.N < 0 || !(grid.h > 0.0))
    throw std::invalid_argument("sample: invalid grid");
  SampledIntegrand s{grid, t, {}, {}};
  const int m = grid.m();
  s.values.resize(m);
  s.weights.resize(m);
  for (int j = -grid.M; j <= grid.N; ++j) {
    const int idx = j + grid.M;
    const double u = j * grid.h;
    const double w = t.derivative(u);
    s.weights[idx] = w;
    if (w < kDerivativeFloor) {
      s.values[idx] = 0.0;
      continue;
    }
    const EndpointGaps g = t.endpoint_gaps(u);
    const double v = f(t.forward(u), g.lower, g.upper) * w;
    if (!std::isfinite(v))
      throw SampleError(j, "sample: non-finite integrand value at node j = " + std::to_string(j));
    s.values[idx] = v;
  }
  return s;
}

double indef_basis(const SampledIntegrand& s, double x) {
  const double u = s.transform.inverse(x);
  const GridParams& g = s.grid;
  double acc = 0.0;
  for (int j = -g.M; j <= g.N; ++j)
    acc += s.values[j + g.M] * j_basis({j, g.h}, u);
  return acc;
}

double trapezoid_total(const SampledIntegrand& s) {
  if (s.grid.M != s.grid.N)
    throw std::invalid_argument("trapezoid_total: requires a symmetric grid (M == N)");
  double acc = 0.0;
  for (double v : s.values) acc += v;
  return s.grid.h * acc;
}

DoubleSumEvaluator::DoubleSumEvaluator(const SampledIntegrand& s)
    : transform_(s.transform), grid_(s.grid) {
  if (grid_.M != grid_.N)
    throw std::invalid_argument("indef_doublesum: requires a symmetric grid (M == N)");
  if (grid_.N < 1)
    throw std::invalid_argument("indef_doublesum: degenerate grid (n == 0)");
  total_ = trapezoid_total(s);
  const int m = grid_.m();
  // (f(T(jh)) - I*/2) T'(jh) == F_j - I* T'(jh) / 2
  std::vector<double> rhs(m);
  for (int i = 0; i < m; ++i) rhs[i] = s.values[i] - 0.5 * total_ * s.weights[i];
  const IndefMatrix iminus(m);
  coeff_ = iminus.multiply(rhs);
  for (double& c : coeff_) c *= grid_.h;
}

double DoubleSumEvaluator::operator()(double x) const {
  const double u = transform_.inverse(x);
  double acc = 0.0;
  for (int i = -grid_.M; i <= grid_.N; ++i)
    acc += coeff_[i + grid_.M] * sinc((u - i * grid_.h) / grid_.h);
  return acc + total_ * eta(x);
}

double indef_doublesum(const SampledIntegrand& s, double x) { return DoubleSumEvaluator(s)(x); }

}  // namespace sincint
