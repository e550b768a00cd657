#include "renewest/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "renewest/errors.hpp"
#include "renewest/kernels.hpp"

namespace renewest {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw error(errc::invalid_input, message);
}

}  // namespace

void IndicatorSeries::validate() const {
  require(std::isfinite(interval) && interval > 0.0, "indicator series: interval length must be positive");
  require(!indicators.empty(), "indicator series: at least one interval is required");
  for (auto flag : indicators) {
    require(flag == 0 || flag == 1, "indicator series: indicators must be 0 or 1");
  }
}

void SurvivalCurve::validate() const {
  require(std::isfinite(interval) && interval > 0.0, "survival curve: interval length must be positive");
  require(values.size() >= 2, "survival curve: needs values at lags 0..v with v >= 1");
  require(values[0] == 1.0, "survival curve: value at lag 0 must be 1");
  for (std::size_t k = 0; k < values.size(); ++k) {
    require(std::isfinite(values[k]) && values[k] >= 0.0 && values[k] <= 1.0,
            "survival curve: values must lie in [0, 1]");
    if (k > 0) require(values[k] <= values[k - 1], "survival curve: values must be nonincreasing");
  }
}

void ForwardPdfEstimate::validate() const {
  require(std::isfinite(interval) && interval > 0.0, "pdf estimate: interval length must be positive");
  require(cutoff >= 2 && density.size() == cutoff, "pdf estimate: density needs values at lags 0..K-1");
  require(std::isfinite(mean) && mean > 0.0, "pdf estimate: mean must be positive");
  for (double g : density) require(std::isfinite(g) && g >= 0.0, "pdf estimate: density must be nonnegative");
}

void CdfEstimate::validate() const {
  require(std::isfinite(interval) && interval > 0.0, "cdf estimate: interval length must be positive");
  require(!knots.empty() && knots[0] == 0.0, "cdf estimate: first knot must be 0");
  for (std::size_t k = 0; k < knots.size(); ++k) {
    require(std::isfinite(knots[k]) && knots[k] >= 0.0 && knots[k] <= 1.0,
            "cdf estimate: knots must lie in [0, 1]");
    if (k > 0) require(knots[k] >= knots[k - 1], "cdf estimate: knots must be nondecreasing");
  }
}

SurvivalCurve survival_from_indicators(const IndicatorSeries& series) {
  series.validate();
  const std::size_t v = series.size();

  std::vector<std::uint64_t> counts(v);
  kernels::count_all_true_windows(series.indicators.data(), v, counts.data());

  SurvivalCurve curve;
  curve.interval = series.interval;
  curve.values.resize(v + 1);
  curve.values[0] = 1.0;
  for (std::size_t k = 1; k <= v; ++k) {
    curve.values[k] = static_cast<double>(counts[k - 1]) / static_cast<double>(v - k + 1);
  }
  return curve;
}

std::size_t determine_cutoff(const SurvivalCurve& curve) {
  curve.validate();
  const auto& p = curve.values;
  const std::size_t v = curve.max_lag();
  for (std::size_t k = 2; k <= v; ++k) {
    if (p[k - 2] == 0.0 && p[k - 1] == 0.0 && p[k] == 0.0) return k;
  }

  std::optional<std::size_t> last_zero;
  for (std::size_t k = v; k >= 1; --k) {
    if (p[k] == 0.0) {
      last_zero = k;
      break;
    }
  }
  std::ostringstream msg;
  msg << "survival curve never reaches three consecutive zeros within v = " << v
      << " lags (largest zero lag: ";
  if (last_zero) {
    msg << *last_zero;
  } else {
    msg << "none";
  }
  msg << "); the observation period is too short relative to event sparsity";
  throw horizon_insufficient_error(msg.str(), last_zero);
}

ForwardPdfEstimate pdf_from_survival(const SurvivalCurve& curve, std::size_t cutoff) {
  curve.validate();
  const auto& p = curve.values;
  const std::size_t v = curve.max_lag();
  require(cutoff >= 2 && cutoff <= v, "pdf estimate: cutoff must satisfy 2 <= K <= v");

  const double t = curve.interval;
  std::vector<double> density(cutoff, 0.0);
  for (std::size_t k = 1; k < cutoff; ++k) {
    density[k] = (p[k - 1] - p[k + 1]) / (2.0 * t);
  }

  double tail_sum = 0.0;
  for (std::size_t k = 1; k + 1 < cutoff; ++k) tail_sum += density[k] * t;
  const double denominator = 1.0 - tail_sum;
  if (!(denominator > 0.0)) {
    std::ostringstream msg;
    msg << "trapezoid normalization is degenerate: sum of density*t over interior lags is "
        << tail_sum << " >= 1, which would force a nonpositive mean";
    throw degenerate_normalization_error(msg.str(), tail_sum);
  }

  ForwardPdfEstimate pdf;
  pdf.interval = t;
  pdf.cutoff = cutoff;
  pdf.mean = t / (2.0 * denominator);
  density[0] = 1.0 / pdf.mean;
  pdf.density = std::move(density);
  return pdf;
}

CdfEstimate cdf_grid_from_pdf(const ForwardPdfEstimate& pdf) {
  pdf.validate();

  CdfEstimate estimate;
  estimate.interval = pdf.interval;
  estimate.mean = pdf.mean;
  estimate.knots.resize(pdf.cutoff);
  estimate.knots[0] = 0.0;
  double running = 0.0;
  for (std::size_t k = 1; k < pdf.cutoff; ++k) {
    running = std::max(running, 1.0 - pdf.mean * pdf.density[k]);
    estimate.knots[k] = std::clamp(running, 0.0, 1.0);
  }
  return estimate;
}

double cdf_at(const CdfEstimate& estimate, double x) {
  require(std::isfinite(x) && x >= 0.0, "cdf query: x must be nonnegative");
  const auto& knots = estimate.knots;
  const double t = estimate.interval;
  const std::size_t last = knots.size() - 1;

  const double position = x / t;
  if (position >= static_cast<double>(last)) return knots[last];
  const auto k = static_cast<std::size_t>(position);
  const double fraction = (x - static_cast<double>(k) * t) / t;
  const double value = knots[k] + fraction * (knots[k + 1] - knots[k]);
  // interpolation stays inside its segment even under rounding
  return std::clamp(value, knots[k], knots[k + 1]);
}

CdfEstimate estimate_cdf(const IndicatorSeries& series) {
  const SurvivalCurve curve = survival_from_indicators(series);
  const std::size_t cutoff = determine_cutoff(curve);
  return cdf_grid_from_pdf(pdf_from_survival(curve, cutoff));
}

}  // namespace renewest
