#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "renewest/errors.hpp"
#include "renewest/estimator.hpp"
#include "renewest/rng.hpp"
#include "renewest/simulate.hpp"

using namespace renewest;

namespace {

constexpr std::array<WeibullSpec, 4> kDesignSpecs{{{1.090, 5.0}, {1.009, 3.5}, {1.000, 1.0}, {0.878, 0.8}}};

}  // namespace

TEST_CASE("epoch accumulation truncates at the horizon") {
  const std::vector<double> samples{0.4, 0.7, 0.5};
  std::size_t i = 0;
  const auto trace = accumulate_epochs([&] { return samples[i++]; }, 0.0, 1.5);
  REQUIRE(trace.epochs.size() == 2);
  CHECK(trace.epochs[0] == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(trace.epochs[1] == doctest::Approx(1.1).epsilon(1e-15));
}

TEST_CASE("epoch accumulation drops warm-up epochs at or before zero") {
  const std::vector<double> samples{0.5, 0.5, 0.75, 1.0, 10.0};
  std::size_t i = 0;
  const auto trace = accumulate_epochs([&] { return samples[i++]; }, 1.0, 2.0);
  // epochs relative to origin: -0.5, 0.0, 0.75, 1.75, then past the horizon
  REQUIRE(trace.epochs.size() == 2);
  CHECK(trace.epochs[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(trace.epochs[1] == doctest::Approx(1.75).epsilon(1e-12));
}

TEST_CASE("simulate_trace: identical seeds give identical traces") {
  const SimConfig config{{1.009, 3.5}, 25.0, 50.0, 0xfeedbeef};
  const auto a = simulate_trace(config);
  const auto b = simulate_trace(config);
  CHECK(a.epochs == b.epochs);

  SimConfig other = config;
  other.seed = 0xfeedbef0;
  CHECK(simulate_trace(other).epochs != a.epochs);
}

TEST_CASE("simulate_trace: epochs are strictly increasing inside (0, horizon]") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SimConfig config{{0.878, 0.8}, 40.0, 50.0, seed};
    const auto trace = simulate_trace(config);
    trace.validate();
  }
}

TEST_CASE("binning: worked example, empty trace, and bad partition") {
  EventTrace trace{2.0, {0.4, 1.1}};
  const auto series = bin_to_indicators(trace, 0.5);
  CHECK(series.indicators == std::vector<std::uint8_t>{0, 1, 0, 1});
  CHECK(series.interval == 0.5);

  const auto empty = bin_to_indicators(EventTrace{1.0, {}}, 0.5);
  CHECK(empty.indicators == std::vector<std::uint8_t>{1, 1});

  CHECK_THROWS_AS(bin_to_indicators(EventTrace{1.0, {}}, 0.3), error);
  try {
    bin_to_indicators(EventTrace{1.0, {}}, 0.3);
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_partition);
  }
}

TEST_CASE("binning: an epoch exactly on an inspection instant belongs to the earlier interval") {
  EventTrace trace{2.0, {0.5, 1.0, 1.625}};
  const auto series = bin_to_indicators(trace, 0.5);
  // intervals (0,.5] (.5,1] (1,1.5] (1.5,2]
  CHECK(series.indicators == std::vector<std::uint8_t>{0, 0, 1, 0});

  EventTrace at_end{2.0, {2.0}};
  CHECK(bin_to_indicators(at_end, 0.5).indicators == std::vector<std::uint8_t>{1, 1, 1, 0});
}

TEST_CASE("binning: occupied intervals never exceed the number of epochs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const SimConfig config{{1.0, 1.0}, 20.0, 10.0, rng()};
    const auto trace = simulate_trace(config);
    const auto series = bin_to_indicators(trace, 0.5);
    std::size_t occupied = 0;
    for (auto flag : series.indicators) occupied += flag == 0 ? 1 : 0;
    CHECK(occupied <= trace.epochs.size());
    CHECK(series.indicators.size() == 40);
  }
}

TEST_CASE("sampling: empirical means match the analytic means within 3 standard errors") {
  for (const auto& spec : kDesignSpecs) {
    RngEngine engine(0xabcdef99);
    const std::size_t n = 1000000;
    double sum = 0.0;
    double sum_squares = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = sample_inter_event(spec, engine);
      sum += x;
      sum_squares += x * x;
    }
    const double mean = sum / static_cast<double>(n);
    const double variance = sum_squares / static_cast<double>(n) - mean * mean;
    const double stderr_mean = std::sqrt(variance / static_cast<double>(n));
    CHECK(std::fabs(mean - weibull_mean(spec)) <= 3.0 * stderr_mean);
  }
}

TEST_CASE("equilibrium: no-event probability over (0, kt] matches exp(-kt) for the exponential") {
  const WeibullSpec exponential{1.0, 1.0};
  const double t = 0.2;
  const std::size_t traces = 2000;
  const int max_lag = 10;

  std::vector<std::vector<double>> indicator_samples(max_lag);
  for (std::size_t run = 0; run < traces; ++run) {
    const SimConfig config{exponential, 5.0, 50.0, derive_seed(0x5eed, 77, run)};
    const auto trace = simulate_trace(config);
    const double first = trace.epochs.empty() ? 1e9 : trace.epochs.front();
    for (int k = 1; k <= max_lag; ++k) {
      indicator_samples[k - 1].push_back(first > static_cast<double>(k) * t ? 1.0 : 0.0);
    }
  }
  for (int k = 1; k <= max_lag; ++k) {
    const auto stats = oracles::mean_and_sd(indicator_samples[k - 1]);
    const double expected = std::exp(-static_cast<double>(k) * t);
    const double stderr_mean = stats.sd / std::sqrt(static_cast<double>(traces));
    CHECK(std::fabs(stats.mean - expected) <= 4.0 * stderr_mean);
  }
}

TEST_CASE("stationarity: first-epoch distribution matches the forward-recurrence cdf") {
  for (const auto& spec : kDesignSpecs) {
    std::vector<double> first_epochs;
    const std::size_t traces = 2000;
    for (std::size_t run = 0; run < traces; ++run) {
      const SimConfig config{spec, 50.0, 50.0, derive_seed(0x51a7e, 5, run)};
      const auto trace = simulate_trace(config);
      REQUIRE(!trace.epochs.empty());
      first_epochs.push_back(trace.epochs.front());
    }
    const double distance = oracles::ks_distance(first_epochs, [&](double x) {
      return oracles::forward_recurrence_cdf(spec.alpha, spec.beta, x);
    });
    CHECK(distance < 0.05);
  }
}
