#include "renewest/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "renewest/errors.hpp"
#include "renewest/estimator.hpp"
#include "renewest/kernels.hpp"

namespace renewest {

double max_abs_cdf_diff(const CdfEstimate& estimate, const WeibullSpec& truth, double grid_step) {
  estimate.validate();
  if (!(std::isfinite(grid_step) && grid_step > 0.0)) {
    throw error(errc::invalid_input, "cdf metric: grid step must be positive");
  }

  const double t = estimate.interval;
  const std::size_t nk = estimate.knots.size();
  const double x_max = std::max(estimate.support_end(), weibull_quantile(truth, 0.999));

  const auto n = static_cast<std::size_t>(std::floor(x_max / grid_step)) + 1;
  std::vector<double> reference(n);
  for (std::size_t j = 0; j < n; ++j) {
    reference[j] = weibull_cdf(truth, static_cast<double>(j) * grid_step);
  }

  double best;
  const double steps = t / grid_step;
  const auto m = static_cast<std::size_t>(std::llround(steps));
  if (m >= 1 && std::fabs(steps - static_cast<double>(m)) < 1e-9) {
    // knot spacing is a whole number of grid steps: fused kernel path
    best = kernels::sup_abs_diff_pwl_uniform(estimate.knots.data(), nk, m, reference.data(), n);
  } else {
    best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      best = std::max(best, std::fabs(cdf_at(estimate, static_cast<double>(j) * grid_step) - reference[j]));
    }
  }

  best = std::max(best, std::fabs(cdf_at(estimate, x_max) - weibull_cdf(truth, x_max)));
  for (std::size_t k = 0; k < nk; ++k) {
    const double x = static_cast<double>(k) * t;
    best = std::max(best, std::fabs(estimate.knots[k] - weibull_cdf(truth, x)));
  }
  return best;
}

double abs_mean_diff(double mean_estimate, const WeibullSpec& truth) {
  if (!(std::isfinite(mean_estimate) && mean_estimate > 0.0)) {
    throw error(errc::invalid_input, "mean metric: mean estimate must be positive");
  }
  return std::fabs(mean_estimate - weibull_mean(truth));
}

}  // namespace renewest
