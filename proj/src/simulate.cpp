#include "renewest/simulate.hpp"

#include <cmath>
#include <sstream>

#include "renewest/errors.hpp"

namespace renewest {

void EventTrace::validate() const {
  if (!(std::isfinite(horizon) && horizon > 0.0)) {
    throw error(errc::invalid_input, "event trace: horizon must be positive");
  }
  double previous = 0.0;
  for (double epoch : epochs) {
    if (!(epoch > previous && epoch <= horizon)) {
      throw error(errc::invalid_input,
                  "event trace: epochs must be strictly increasing within (0, horizon]");
    }
    previous = epoch;
  }
}

void SimConfig::validate() const {
  spec.validate();
  if (!(std::isfinite(horizon) && horizon > 0.0)) {
    throw error(errc::invalid_input, "sim config: horizon must be positive");
  }
  if (!(std::isfinite(warmup) && warmup >= 0.0)) {
    throw error(errc::invalid_input, "sim config: warmup must be nonnegative");
  }
}

double sample_inter_event(const WeibullSpec& spec, RngEngine& engine) {
  return inter_event_from_uniform(spec, open_unit(engine));
}

EventTrace simulate_trace(const SimConfig& config) {
  config.validate();
  RngEngine engine(config.seed);
  return accumulate_epochs([&] { return sample_inter_event(config.spec, engine); },
                           config.warmup, config.horizon);
}

IndicatorSeries bin_to_indicators(const EventTrace& trace, double interval) {
  trace.validate();
  if (!(std::isfinite(interval) && interval > 0.0)) {
    throw error(errc::invalid_input, "binning: interval length must be positive");
  }
  const double ratio = trace.horizon / interval;
  const double rounded = std::round(ratio);
  if (!(rounded >= 1.0) || std::fabs(ratio - rounded) > 1e-9) {
    std::ostringstream msg;
    msg << "binning: horizon " << trace.horizon << " is not an integer multiple of interval "
        << interval << " (ratio " << ratio << ")";
    throw error(errc::invalid_partition, msg.str());
  }
  const auto v = static_cast<std::size_t>(rounded);

  IndicatorSeries series;
  series.interval = interval;
  series.indicators.assign(v, 1);
  for (double epoch : trace.epochs) {
    // half-open intervals ((i-1)t, it]: an epoch exactly at it belongs to interval i
    auto index = static_cast<std::size_t>(std::ceil(epoch / interval));
    if (index < 1) index = 1;
    if (index > v) index = v;
    series.indicators[index - 1] = 0;
  }
  return series;
}

}  // namespace renewest
