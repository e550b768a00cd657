#pragma once

#include <cstddef>

#include "renewest/types.hpp"

namespace renewest {

// Overlapping-window survival estimate: values[k] is the fraction of the
// v-k+1 windows of k consecutive intervals that contain no event, values[0] = 1.
// Exactly equal to the direct window-count definition (the packed-bit kernel
// computes the same integer counts).
SurvivalCurve survival_from_indicators(const IndicatorSeries& series);

// Smallest K >= 2 with values[K-2] = values[K-1] = values[K] = 0, searching up
// to the curve's last lag. Throws horizon_insufficient_error when no such K
// exists.
std::size_t determine_cutoff(const SurvivalCurve& curve);

// Centered-difference density on the lattice together with the mean estimate
// from the trapezoid normalization:
//   density[k] = (values[k-1] - values[k+1]) / (2 t),  k = 1..K-1
//   mean       = t / (2 (1 - sum_{k=1}^{K-2} density[k] t))
//   density[0] = 1 / mean
// Throws degenerate_normalization_error when the denominator is <= 0.
ForwardPdfEstimate pdf_from_survival(const SurvivalCurve& curve, std::size_t cutoff);

// Cdf knots 1 - mean*density[k], swept with a running max so the sequence is
// nondecreasing, then clamped into [0, 1]; knots[0] = 0.
CdfEstimate cdf_grid_from_pdf(const ForwardPdfEstimate& pdf);

// Linear interpolation between knots; the knot value at knots; constant
// extension beyond the last knot. Throws on negative x.
double cdf_at(const CdfEstimate& estimate, double x);

// Full pipeline: survival -> cutoff -> density/mean -> Cdf grid.
CdfEstimate estimate_cdf(const IndicatorSeries& series);

}  // namespace renewest
