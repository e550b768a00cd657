#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "renewest/weibull.hpp"

namespace renewest {

struct LabeledSpec {
  WeibullSpec spec;
  std::string label;
};

// Full factorial Monte Carlo design: distributions x horizons x intervals,
// `runs` independent traces per cell.
struct ExperimentConfig {
  std::vector<LabeledSpec> distributions;
  std::vector<double> horizons;
  std::vector<double> intervals;
  std::size_t runs = 1000;
  std::uint64_t master_seed = 0x5eed2026u;
  double warmup = 50.0;
  double grid_step_divisor = 20.0;  // sup-norm grid step = t / divisor

  // The four-Weibull design: T in {50, 100, 500, 1000}, t in {0.1, 0.2, 0.5, 1}.
  static ExperimentConfig defaults();

  void validate() const;
  std::size_t cell_count() const noexcept {
    return distributions.size() * horizons.size() * intervals.size();
  }
};

struct CellResult {
  std::string dist_label;
  double horizon = 0.0;
  double interval = 0.0;
  std::size_t runs_attempted = 0;
  std::size_t runs_failed = 0;  // horizon-insufficient or degenerate runs
  // Averages over successful runs; NaN when every run failed.
  double mean_max_abs_cdf_diff = 0.0;
  double mean_abs_mean_diff = 0.0;

  bool all_failed() const noexcept { return runs_failed == runs_attempted; }
};

enum class Metric { cdf_diff, mean_diff };

double cell_metric(const CellResult& cell, Metric metric) noexcept;

// Runs every cell; deterministic for a given master_seed regardless of thread
// count (run r of cell c is seeded with derive_seed(master_seed, c, r) and
// results reduce in run order). threads = 0 picks hardware concurrency.
std::vector<CellResult> run_experiment(const ExperimentConfig& config, unsigned threads = 0);

struct FactorMeans {
  std::vector<std::pair<std::string, double>> by_distribution;
  std::vector<std::pair<double, double>> by_horizon;
  std::vector<std::pair<double, double>> by_interval;
  double grand = 0.0;
};

// Arithmetic means of the emitted cell values (cells where every run failed
// are skipped).
FactorMeans factor_means(const std::vector<CellResult>& cells, Metric metric);

}  // namespace renewest
