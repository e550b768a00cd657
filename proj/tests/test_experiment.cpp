#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "renewest/errors.hpp"
#include "renewest/estimator.hpp"
#include "renewest/experiment.hpp"
#include "renewest/io.hpp"
#include "renewest/metrics.hpp"
#include "renewest/rng.hpp"
#include "renewest/simulate.hpp"

using namespace renewest;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig config;
  config.distributions = {{{1.0, 1.0}, "exp"}, {{1.009, 3.5}, "w35"}};
  config.horizons = {20.0, 50.0};
  config.intervals = {0.5, 1.0};
  config.runs = 12;
  config.master_seed = 424242;
  return config;
}

bool cells_equal(const std::vector<CellResult>& a, const std::vector<CellResult>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool same_stats =
        a[i].runs_attempted == b[i].runs_attempted && a[i].runs_failed == b[i].runs_failed;
    const bool same_metrics =
        (a[i].all_failed() && b[i].all_failed()) ||
        (a[i].mean_max_abs_cdf_diff == b[i].mean_max_abs_cdf_diff &&
         a[i].mean_abs_mean_diff == b[i].mean_abs_mean_diff);
    if (!same_stats || !same_metrics || a[i].dist_label != b[i].dist_label ||
        a[i].horizon != b[i].horizon || a[i].interval != b[i].interval) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("run_experiment: a single run equals the manually chained pipeline") {
  ExperimentConfig config;
  config.distributions = {{{1.0, 1.0}, "exp"}};
  config.horizons = {50.0};
  config.intervals = {0.2};
  config.runs = 1;
  config.master_seed = 97531;

  const auto cells = run_experiment(config, 1);
  REQUIRE(cells.size() == 1);
  REQUIRE(cells[0].runs_failed == 0);

  const SimConfig sim{config.distributions[0].spec, 50.0, config.warmup, derive_seed(97531, 0, 0)};
  const auto series = bin_to_indicators(simulate_trace(sim), 0.2);
  const auto estimate = estimate_cdf(series);
  const double cdf_diff =
      max_abs_cdf_diff(estimate, config.distributions[0].spec, 0.2 / config.grid_step_divisor);
  const double mean_diff = abs_mean_diff(estimate.mean, config.distributions[0].spec);

  CHECK(cells[0].mean_max_abs_cdf_diff == cdf_diff);
  CHECK(cells[0].mean_abs_mean_diff == mean_diff);
}

TEST_CASE("run_experiment: deterministic and identical across thread counts") {
  const auto config = small_config();
  const auto serial = run_experiment(config, 1);
  const auto repeated = run_experiment(config, 1);
  const auto parallel = run_experiment(config, 4);
  CHECK(cells_equal(serial, repeated));
  CHECK(cells_equal(serial, parallel));

  CHECK(cells_to_csv(serial, Metric::cdf_diff) == cells_to_csv(parallel, Metric::cdf_diff));
  CHECK(cells_to_csv(serial, Metric::mean_diff) == cells_to_csv(parallel, Metric::mean_diff));
  CHECK(factor_means_to_csv(serial) == factor_means_to_csv(parallel));
}

TEST_CASE("run_experiment: changing the master seed changes the outcomes") {
  auto config = small_config();
  const auto a = run_experiment(config, 2);
  config.master_seed += 1;
  const auto b = run_experiment(config, 2);
  CHECK_FALSE(cells_equal(a, b));
}

TEST_CASE("run_experiment: cells that cannot reach a cutoff are failure-marked, not omitted") {
  ExperimentConfig config;
  // v = T/t = 2 intervals can never hold three consecutive zero survival lags
  config.distributions = {{{1.0, 1.0}, "exp"}};
  config.horizons = {2.0};
  config.intervals = {1.0};
  config.runs = 5;
  config.master_seed = 5;

  const auto cells = run_experiment(config, 1);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].runs_attempted == 5);
  CHECK(cells[0].runs_failed == 5);
  CHECK(cells[0].all_failed());
  CHECK(std::isnan(cells[0].mean_max_abs_cdf_diff));

  const std::string csv = cells_to_csv(cells, Metric::cdf_diff);
  CHECK(csv.find("2,1,exp,NA,5") != std::string::npos);
}

TEST_CASE("run_experiment: config validation") {
  ExperimentConfig config = small_config();
  config.intervals = {0.3};  // 20/0.3 is not integral
  CHECK_THROWS_AS(run_experiment(config, 1), error);

  config = small_config();
  config.runs = 0;
  CHECK_THROWS_AS(config.validate(), error);

  config = small_config();
  config.distributions.clear();
  CHECK_THROWS_AS(config.validate(), error);
}

TEST_CASE("factor means: exact arithmetic means of the emitted cells") {
  const auto cells = run_experiment(small_config(), 2);
  for (Metric metric : {Metric::cdf_diff, Metric::mean_diff}) {
    const FactorMeans means = factor_means(cells, metric);

    for (const auto& [label, value] : means.by_distribution) {
      double sum = 0.0;
      std::size_t count = 0;
      for (const auto& cell : cells) {
        if (cell.dist_label == label && !cell.all_failed()) {
          sum += cell_metric(cell, metric);
          ++count;
        }
      }
      CHECK(std::fabs(value - sum / static_cast<double>(count)) <= 1e-12);
    }

    double grand_sum = 0.0;
    std::size_t grand_count = 0;
    for (const auto& cell : cells) {
      if (!cell.all_failed()) {
        grand_sum += cell_metric(cell, metric);
        ++grand_count;
      }
    }
    CHECK(std::fabs(means.grand - grand_sum / static_cast<double>(grand_count)) <= 1e-12);
  }
}

TEST_CASE("run_experiment: default design smoke run completes with all cells populated") {
  ExperimentConfig config = ExperimentConfig::defaults();
  config.runs = 2;
  const auto cells = run_experiment(config);
  CHECK(cells.size() == 64);
  for (const auto& cell : cells) {
    CHECK(cell.runs_attempted == 2);
    if (!cell.all_failed()) {
      CHECK(cell.mean_max_abs_cdf_diff >= 0.0);
      CHECK(cell.mean_max_abs_cdf_diff <= 1.0);
      CHECK(cell.mean_abs_mean_diff >= 0.0);
    }
  }
}
