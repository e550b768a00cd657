#include "renewest/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "renewest/errors.hpp"
#include "renewest/estimator.hpp"
#include "renewest/metrics.hpp"
#include "renewest/rng.hpp"
#include "renewest/simulate.hpp"

namespace renewest {

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig config;
  config.distributions = {
      {{1.090, 5.0}, "1"},
      {{1.009, 3.5}, "2"},
      {{1.000, 1.0}, "3"},
      {{0.878, 0.8}, "4"},
  };
  config.horizons = {50.0, 100.0, 500.0, 1000.0};
  config.intervals = {0.1, 0.2, 0.5, 1.0};
  return config;
}

void ExperimentConfig::validate() const {
  if (distributions.empty() || horizons.empty() || intervals.empty()) {
    throw error(errc::bad_config, "experiment config: distributions, horizons, and intervals must be nonempty");
  }
  if (runs < 1) throw error(errc::bad_config, "experiment config: runs must be >= 1");
  if (!(std::isfinite(warmup) && warmup >= 0.0)) {
    throw error(errc::bad_config, "experiment config: warmup must be nonnegative");
  }
  if (!(std::isfinite(grid_step_divisor) && grid_step_divisor > 0.0)) {
    throw error(errc::bad_config, "experiment config: grid_step_divisor must be positive");
  }
  for (const auto& dist : distributions) dist.spec.validate();
  for (double horizon : horizons) {
    if (!(std::isfinite(horizon) && horizon > 0.0)) {
      throw error(errc::bad_config, "experiment config: horizons must be positive");
    }
    for (double interval : intervals) {
      const double ratio = horizon / interval;
      if (!(interval > 0.0) || std::fabs(ratio - std::round(ratio)) > 1e-9) {
        throw error(errc::bad_config,
                    "experiment config: every horizon must be an integer multiple of every interval");
      }
    }
  }
}

double cell_metric(const CellResult& cell, Metric metric) noexcept {
  return metric == Metric::cdf_diff ? cell.mean_max_abs_cdf_diff : cell.mean_abs_mean_diff;
}

namespace {

struct RunOutcome {
  bool ok = false;
  double cdf_diff = 0.0;
  double mean_diff = 0.0;
};

// Index-addressed parallel loop; outcome slots make the reduction independent
// of scheduling order.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<CellResult> run_experiment(const ExperimentConfig& config, unsigned threads) {
  config.validate();

  std::vector<CellResult> cells;
  cells.reserve(config.cell_count());

  std::size_t cell_index = 0;
  for (const auto& dist : config.distributions) {
    for (double horizon : config.horizons) {
      for (double interval : config.intervals) {
        std::vector<RunOutcome> outcomes(config.runs);
        const double grid_step = interval / config.grid_step_divisor;

        parallel_for(config.runs, threads, [&](std::size_t run) {
          SimConfig sim{dist.spec, horizon, config.warmup,
                        derive_seed(config.master_seed, cell_index, run)};
          const EventTrace trace = simulate_trace(sim);
          const IndicatorSeries series = bin_to_indicators(trace, interval);
          try {
            const CdfEstimate estimate = estimate_cdf(series);
            outcomes[run] = {true, max_abs_cdf_diff(estimate, dist.spec, grid_step),
                             abs_mean_diff(estimate.mean, dist.spec)};
          } catch (const error& e) {
            if (!is_estimation_failure(e.code())) throw;
            outcomes[run] = {false, 0.0, 0.0};
          }
        });

        CellResult cell;
        cell.dist_label = dist.label;
        cell.horizon = horizon;
        cell.interval = interval;
        cell.runs_attempted = config.runs;
        double cdf_sum = 0.0;
        double mean_sum = 0.0;
        std::size_t ok_count = 0;
        for (const auto& outcome : outcomes) {
          if (!outcome.ok) continue;
          cdf_sum += outcome.cdf_diff;
          mean_sum += outcome.mean_diff;
          ++ok_count;
        }
        cell.runs_failed = config.runs - ok_count;
        if (ok_count > 0) {
          cell.mean_max_abs_cdf_diff = cdf_sum / static_cast<double>(ok_count);
          cell.mean_abs_mean_diff = mean_sum / static_cast<double>(ok_count);
        } else {
          cell.mean_max_abs_cdf_diff = std::numeric_limits<double>::quiet_NaN();
          cell.mean_abs_mean_diff = std::numeric_limits<double>::quiet_NaN();
        }
        cells.push_back(std::move(cell));
        ++cell_index;
      }
    }
  }
  return cells;
}

FactorMeans factor_means(const std::vector<CellResult>& cells, Metric metric) {
  FactorMeans means;

  auto mean_over = [&](auto&& predicate) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& cell : cells) {
      if (cell.all_failed() || !predicate(cell)) continue;
      sum += cell_metric(cell, metric);
      ++count;
    }
    return count > 0 ? sum / static_cast<double>(count) : std::numeric_limits<double>::quiet_NaN();
  };

  auto seen = [](auto& list, const auto& key) {
    for (const auto& entry : list) {
      if (entry.first == key) return true;
    }
    return false;
  };

  for (const auto& cell : cells) {
    if (!seen(means.by_distribution, cell.dist_label)) {
      means.by_distribution.emplace_back(
          cell.dist_label, mean_over([&](const CellResult& c) { return c.dist_label == cell.dist_label; }));
    }
    if (!seen(means.by_horizon, cell.horizon)) {
      means.by_horizon.emplace_back(
          cell.horizon, mean_over([&](const CellResult& c) { return c.horizon == cell.horizon; }));
    }
    if (!seen(means.by_interval, cell.interval)) {
      means.by_interval.emplace_back(
          cell.interval, mean_over([&](const CellResult& c) { return c.interval == cell.interval; }));
    }
  }
  means.grand = mean_over([](const CellResult&) { return true; });
  return means;
}

}  // namespace renewest
