#pragma once

#include <optional>
#include <string>
#include <vector>

#include "renewest/experiment.hpp"
#include "renewest/types.hpp"

namespace renewest {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Indicator input. JSON: {"t": <number>, "indicators": [0|1, ...]} with 1
// meaning "no event observed in the interval". CSV: header `interval,empty`,
// one row per interval in order; the interval length comes from a leading
// `# t=<value>` comment line or the explicit override.
IndicatorSeries parse_indicator_json(const std::string& text);
IndicatorSeries parse_indicator_csv(const std::string& text,
                                    std::optional<double> interval_override = std::nullopt);
IndicatorSeries load_indicator_series(const std::string& path,
                                      std::optional<double> interval_override = std::nullopt);

std::string indicator_series_to_json(const IndicatorSeries& series);
std::string indicator_series_to_csv(const IndicatorSeries& series);
std::string event_trace_to_json(const EventTrace& trace);

// Experiment config JSON keys: distributions (list of {alpha, beta, label}),
// horizons, intervals, runs, master_seed, warmup, grid_step_divisor. Missing
// keys fall back to the default design.
ExperimentConfig parse_experiment_config_json(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);
std::string experiment_config_to_json(const ExperimentConfig& config);

// Long-format result table: T,t,dist_label,metric,failed_runs. Cells where
// every run failed carry NA in the metric column.
std::string cells_to_csv(const std::vector<CellResult>& cells, Metric metric);
std::string factor_means_to_csv(const std::vector<CellResult>& cells);

// Paper-shaped rendering: rows T x t, one column per distribution.
std::string cells_to_markdown(const std::vector<CellResult>& cells, Metric metric,
                              const std::string& title);
std::string factor_means_to_markdown(const std::vector<CellResult>& cells, Metric metric,
                                     const std::string& title);

}  // namespace renewest
