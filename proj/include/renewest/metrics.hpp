#pragma once

#include "renewest/types.hpp"
#include "renewest/weibull.hpp"

namespace renewest {

// Sup-norm distance between the estimated and analytic Cdf, taken over the
// grid {0, grid_step, 2*grid_step, ...} up to
// x_max = max(estimate support end, 99.9th truth percentile), plus x_max
// itself and every knot. The estimate's constant tail extension is in force.
double max_abs_cdf_diff(const CdfEstimate& estimate, const WeibullSpec& truth, double grid_step);

// |mean_estimate - alpha*Gamma(1 + 1/beta)|
double abs_mean_diff(double mean_estimate, const WeibullSpec& truth);

}  // namespace renewest
