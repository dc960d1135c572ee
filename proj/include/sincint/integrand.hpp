#pragma once

#include <functional>
#include <utility>

namespace sincint {

/// An integrand on (-1, 1).
///
/// The endpoint-aware form additionally receives 1 + x and 1 - x computed
/// without cancellation. For integrands singular at the endpoints this is
/// essential: once a transformed node rounds to +-1, plain x carries no
/// information about the remaining distance, but the gaps still do.
class Integrand {
 public:
  using Plain = std::function<double(double)>;
  using EndpointAware = std::function<double(double x, double one_plus_x, double one_minus_x)>;

  Integrand(Plain f) : plain_(std::move(f)) {}

  static Integrand endpoint_aware(EndpointAware f) {
    Integrand g;
    g.aware_ = std::move(f);
    return g;
  }

  double operator()(double x, double one_plus_x, double one_minus_x) const {
    return aware_ ? aware_(x, one_plus_x, one_minus_x) : plain_(x);
  }

  double operator()(double x) const {
    return aware_ ? aware_(x, 1.0 + x, 1.0 - x) : plain_(x);
  }

 private:
  Integrand() = default;

  Plain plain_;
  EndpointAware aware_;
};

}  // namespace sincint
