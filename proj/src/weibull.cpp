#include "renewest/weibull.hpp"

#include <cmath>

#include "renewest/errors.hpp"

namespace renewest {

void WeibullSpec::validate() const {
  if (!(std::isfinite(alpha) && alpha > 0.0 && std::isfinite(beta) && beta > 0.0)) {
    throw error(errc::invalid_input, "weibull spec: alpha and beta must be positive");
  }
}

double weibull_cdf(const WeibullSpec& spec, double x) {
  spec.validate();
  if (!(std::isfinite(x) && x >= 0.0)) {
    throw error(errc::invalid_input, "weibull cdf: x must be nonnegative");
  }
  if (x == 0.0) return 0.0;
  return -std::expm1(-std::pow(x / spec.alpha, spec.beta));
}

double weibull_mean(const WeibullSpec& spec) {
  spec.validate();
  return spec.alpha * std::tgamma(1.0 + 1.0 / spec.beta);
}

double weibull_quantile(const WeibullSpec& spec, double p) {
  spec.validate();
  if (!(p >= 0.0 && p < 1.0)) {
    throw error(errc::invalid_input, "weibull quantile: p must lie in [0, 1)");
  }
  if (p == 0.0) return 0.0;
  return spec.alpha * std::pow(-std::log1p(-p), 1.0 / spec.beta);
}

double inter_event_from_uniform(const WeibullSpec& spec, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw error(errc::invalid_input, "inter-event sample: u must lie in the open interval (0, 1)");
  }
  return spec.alpha * std::pow(-std::log(u), 1.0 / spec.beta);
}

}  // namespace renewest
