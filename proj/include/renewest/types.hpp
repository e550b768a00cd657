#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace renewest {

// Per-interval observations from periodic inspection: indicators[i] is 1 when
// no event occurred in ((i)*interval, (i+1)*interval] (0-based storage for the
// 1-based intervals), 0 when at least one event occurred.
struct IndicatorSeries {
  double interval = 0.0;
  std::vector<std::uint8_t> indicators;

  std::size_t size() const noexcept { return indicators.size(); }
  double horizon() const noexcept { return interval * static_cast<double>(indicators.size()); }

  // Throws error(errc::invalid_input) unless interval > 0 and the series is nonempty.
  void validate() const;
};

// Estimated probability that a window of k consecutive intervals contains no
// event: values[k] for k = 0..v, with values[0] == 1.
struct SurvivalCurve {
  double interval = 0.0;
  std::vector<double> values;

  std::size_t max_lag() const noexcept { return values.empty() ? 0 : values.size() - 1; }

  // Enforces values[0] == 1, range [0, 1], and monotone nonincreasing order.
  void validate() const;
};

// Forward-recurrence-time density estimate on the lattice: density[k] is the
// value at k*interval for k = 0..cutoff-1, with density[0] == 1/mean.
struct ForwardPdfEstimate {
  double interval = 0.0;
  std::size_t cutoff = 0;
  std::vector<double> density;
  double mean = 0.0;

  void validate() const;
};

// Monotone piecewise-linear Cdf estimate: knots[k] is the value at k*interval,
// knots[0] == 0. Beyond the last knot the estimate extends as a constant.
struct CdfEstimate {
  double interval = 0.0;
  std::vector<double> knots;
  double mean = 0.0;  // carried along for reporting

  double support_end() const noexcept {
    return knots.empty() ? 0.0 : interval * static_cast<double>(knots.size() - 1);
  }

  void validate() const;
};

// Event epochs observed in (0, horizon], strictly increasing.
struct EventTrace {
  double horizon = 0.0;
  std::vector<double> epochs;

  void validate() const;
};

}  // namespace renewest
