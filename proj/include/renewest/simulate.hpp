#pragma once

#include <cstdint>

#include "renewest/rng.hpp"
#include "renewest/types.hpp"
#include "renewest/weibull.hpp"

namespace renewest {

// One stationary-renewal simulation run. The warm-up shifts the origin into
// equilibrium: inter-event times accumulate from -warmup and only epochs in
// (0, horizon] are kept.
struct SimConfig {
  WeibullSpec spec;
  double horizon = 0.0;
  double warmup = 50.0;
  std::uint64_t seed = 0;

  void validate() const;
};

double sample_inter_event(const WeibullSpec& spec, RngEngine& engine);

EventTrace simulate_trace(const SimConfig& config);

// Accumulates epochs from -warmup using next_sample() and keeps (0, horizon].
// Exposed so tests can drive the truncation logic with pinned samples.
template <typename NextSample>
EventTrace accumulate_epochs(NextSample&& next_sample, double warmup, double horizon) {
  EventTrace trace;
  trace.horizon = horizon;
  double clock = -warmup;
  for (;;) {
    clock += next_sample();
    if (clock > horizon) break;
    if (clock > 0.0) trace.epochs.push_back(clock);
  }
  return trace;
}

// indicators[i-1] = 1 iff no epoch lies in ((i-1)t, it]; an epoch exactly at
// it belongs to interval i. Throws error(errc::invalid_partition) unless
// horizon/t is integral within 1e-9.
IndicatorSeries bin_to_indicators(const EventTrace& trace, double interval);

}  // namespace renewest
