#pragma once

namespace renewest {

// Weibull inter-event-time distribution, F(x) = 1 - exp(-(x/alpha)^beta).
struct WeibullSpec {
  double alpha = 1.0;  // scale
  double beta = 1.0;   // shape

  void validate() const;
};

double weibull_cdf(const WeibullSpec& spec, double x);

// alpha * Gamma(1 + 1/beta)
double weibull_mean(const WeibullSpec& spec);

// Smallest x with F(x) >= p, p in [0, 1).
double weibull_quantile(const WeibullSpec& spec, double p);

// Inverse-transform sample X = alpha * (-ln u)^(1/beta) for u in (0, 1).
// Note the convention: u plays the survival side, so u = exp(-1) maps to
// X = alpha exactly.
double inter_event_from_uniform(const WeibullSpec& spec, double u);

}  // namespace renewest
