#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "renewest/errors.hpp"
#include "renewest/estimator.hpp"
#include "renewest/experiment.hpp"
#include "renewest/io.hpp"
#include "renewest/kernels.hpp"
#include "renewest/metrics.hpp"
#include "renewest/simulate.hpp"

namespace {

using renewest::errc;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;  // bad input files, bad config, bad partitions
constexpr int kExitEstimation = 3;  // horizon-insufficient / degenerate normalization
constexpr int kExitIo = 4;

int exit_code_for(errc code) {
  if (renewest::is_estimation_failure(code)) return kExitEstimation;
  if (code == errc::io_failure) return kExitIo;
  return kExitValidation;
}

std::string fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    renewest::write_file(out_path, content);
  }
}

struct EstimateOptions {
  std::string input;
  std::string out;
  std::string format = "text";
  std::vector<double> queries;
  double interval_override = 0.0;
  bool verbose = false;
};

int run_estimate(const EstimateOptions& opt) {
  std::optional<double> override;
  if (opt.interval_override > 0.0) override = opt.interval_override;
  const renewest::IndicatorSeries series = renewest::load_indicator_series(opt.input, override);
  const renewest::SurvivalCurve curve = renewest::survival_from_indicators(series);

  std::ostringstream text;
  json doc;
  const bool as_json = opt.format == "json";
  const bool as_markdown = opt.format == "markdown";

  if (as_json) {
    doc["t"] = series.interval;
    doc["v"] = series.size();
    if (opt.verbose) doc["survival"] = curve.values;
  } else {
    text << (as_markdown ? "## Cdf estimate\n\n" : "");
    text << "intervals (v): " << series.size() << "\n";
    text << "interval length (t): " << fmt(series.interval) << "\n";
    if (opt.verbose) {
      if (as_markdown) {
        text << "\n| k | x | survival |\n|---|---|---|\n";
        for (std::size_t k = 0; k < curve.values.size(); ++k) {
          text << "| " << k << " | " << fmt(static_cast<double>(k) * series.interval) << " | "
               << fmt(curve.values[k]) << " |\n";
        }
        text << "\n";
      } else {
        text << "survival estimate:\n";
        text << "  k  x  p\n";
        for (std::size_t k = 0; k < curve.values.size(); ++k) {
          text << "  " << k << "  " << fmt(static_cast<double>(k) * series.interval) << "  "
               << fmt(curve.values[k]) << "\n";
        }
      }
    }
  }

  try {
    const std::size_t cutoff = renewest::determine_cutoff(curve);
    const renewest::ForwardPdfEstimate pdf = renewest::pdf_from_survival(curve, cutoff);
    const renewest::CdfEstimate estimate = renewest::cdf_grid_from_pdf(pdf);

    if (as_json) {
      doc["cutoff"] = cutoff;
      doc["mu_hat"] = estimate.mean;
      doc["knots"] = estimate.knots;
      if (!opt.queries.empty()) {
        doc["queries"] = json::array();
        for (double x : opt.queries) {
          doc["queries"].push_back({{"x", x}, {"F", renewest::cdf_at(estimate, x)}});
        }
      }
      emit(doc.dump(2) + "\n", opt.out);
    } else {
      text << "cutoff K: " << cutoff << "\n";
      text << "mean estimate: " << fmt(estimate.mean) << "\n";
      if (as_markdown) {
        text << "\n| k | x | F |\n|---|---|---|\n";
        for (std::size_t k = 0; k < estimate.knots.size(); ++k) {
          text << "| " << k << " | " << fmt(static_cast<double>(k) * estimate.interval) << " | "
               << fmt(estimate.knots[k]) << " |\n";
        }
      } else {
        text << "cdf knots:\n";
        text << "  k  x  F\n";
        for (std::size_t k = 0; k < estimate.knots.size(); ++k) {
          text << "  " << k << "  " << fmt(static_cast<double>(k) * estimate.interval) << "  "
               << fmt(estimate.knots[k]) << "\n";
        }
      }
      if (!opt.queries.empty()) {
        text << (as_markdown ? "\n" : "");
        text << "queries:\n";
        for (double x : opt.queries) {
          text << "  F(" << fmt(x) << ") = " << fmt(renewest::cdf_at(estimate, x)) << "\n";
        }
      }
      emit(text.str(), opt.out);
    }
    return kExitOk;
  } catch (const renewest::error& e) {
    // Surface whatever was computed before the failure, then the error.
    if (as_json) {
      doc["error"] = {{"code", renewest::errc_name(e.code())}, {"message", e.what()}};
      emit(doc.dump(2) + "\n", opt.out);
    } else {
      emit(text.str(), opt.out);
    }
    throw;
  }
}

struct SimulateOptions {
  double alpha = 1.0;
  double beta = 1.0;
  double horizon = 0.0;
  double interval = 0.0;
  double warmup = 50.0;
  std::uint64_t seed = 0;
  std::string emit_kind = "indicators";
  std::string format = "json";
  std::string out;
};

int run_simulate(const SimulateOptions& opt) {
  renewest::SimConfig config{{opt.alpha, opt.beta}, opt.horizon, opt.warmup, opt.seed};
  const renewest::EventTrace trace = renewest::simulate_trace(config);

  if (opt.emit_kind == "epochs") {
    emit(renewest::event_trace_to_json(trace), opt.out);
    return kExitOk;
  }
  if (opt.interval <= 0.0) {
    throw renewest::error(errc::bad_config, "simulate: --interval is required to emit indicators");
  }
  const renewest::IndicatorSeries series = renewest::bin_to_indicators(trace, opt.interval);
  emit(opt.format == "csv" ? renewest::indicator_series_to_csv(series)
                           : renewest::indicator_series_to_json(series),
       opt.out);
  return kExitOk;
}

struct ReproduceOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "csv";
  std::optional<std::size_t> runs;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
};

int run_reproduce(const ReproduceOptions& opt) {
  renewest::ExperimentConfig config = opt.config_path.empty()
                                          ? renewest::ExperimentConfig::defaults()
                                          : renewest::load_experiment_config(opt.config_path);
  if (opt.runs) config.runs = *opt.runs;
  if (opt.seed) config.master_seed = *opt.seed;
  config.validate();

  const std::vector<renewest::CellResult> cells = renewest::run_experiment(config, opt.threads);

  std::filesystem::create_directories(opt.out_dir);
  const auto path = [&](const char* name) { return (std::filesystem::path(opt.out_dir) / name).string(); };
  renewest::write_file(path("table2.csv"), renewest::cells_to_csv(cells, renewest::Metric::cdf_diff));
  renewest::write_file(path("table3.csv"), renewest::cells_to_csv(cells, renewest::Metric::mean_diff));
  renewest::write_file(path("factor_means.csv"), renewest::factor_means_to_csv(cells));
  renewest::write_file(path("run_metadata.json"), renewest::experiment_config_to_json(config));

  if (opt.format == "markdown") {
    std::cout << renewest::cells_to_markdown(cells, renewest::Metric::cdf_diff,
                                             "Means of maximum absolute Cdf difference")
              << "\n"
              << renewest::factor_means_to_markdown(cells, renewest::Metric::cdf_diff,
                                                    "Factor means (Cdf difference)")
              << "\n"
              << renewest::cells_to_markdown(cells, renewest::Metric::mean_diff,
                                             "Means of absolute mean difference")
              << "\n"
              << renewest::factor_means_to_markdown(cells, renewest::Metric::mean_diff,
                                                    "Factor means (mean difference)");
  } else {
    std::cout << "wrote table2.csv, table3.csv, factor_means.csv, run_metadata.json to " << opt.out_dir
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inter-event-time Cdf estimation from periodic-inspection no-event indicators"};
  app.require_subcommand(1);

  EstimateOptions est;
  auto* estimate = app.add_subcommand("estimate", "estimate the Cdf from an indicator file");
  estimate->fallthrough();
  estimate->add_option("input", est.input, "indicator file (JSON or CSV)")->required();
  estimate->add_option("--at", est.queries, "query points to interpolate")->delimiter(',');
  estimate->add_option("--interval", est.interval_override, "interval length for CSV inputs without '# t='");
  estimate->add_flag("--verbose,-v", est.verbose, "include the survival estimate in the report");

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "simulate a stationary Weibull renewal trace");
  simulate->fallthrough();
  simulate->add_option("--alpha", sim.alpha, "Weibull scale")->check(CLI::PositiveNumber);
  simulate->add_option("--beta", sim.beta, "Weibull shape")->check(CLI::PositiveNumber);
  simulate->add_option("--horizon,-T", sim.horizon, "observation period")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--interval,-t", sim.interval, "inspection interval (required for indicators)");
  simulate->add_option("--warmup", sim.warmup, "equilibrium warm-up before the window");
  simulate->add_option("--emit", sim.emit_kind, "indicators|epochs (default indicators)")
      ->check(CLI::IsMember({"indicators", "epochs"}));

  ReproduceOptions rep;
  auto* reproduce = app.add_subcommand("reproduce", "run the factorial Monte Carlo study and emit tables");
  reproduce->fallthrough();
  reproduce->add_option("--config", rep.config_path, "experiment config JSON (defaults to the built-in design)");
  reproduce->add_option("--threads", rep.threads, "worker threads (0 = auto)");

  std::uint64_t seed = 0;
  std::size_t runs = 0;
  std::string out;
  std::string format;
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed / experiment master seed");
  auto* runs_opt = app.add_option("--runs", runs, "runs per experiment cell");
  auto* out_opt = app.add_option("--out", out, "output file (estimate/simulate) or directory (reproduce)");
  auto* format_opt =
      app.add_option("--format", format, "estimate: text|json|markdown; simulate: json|csv; reproduce: csv|markdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (estimate->parsed()) {
      if (*out_opt) est.out = out;
      if (*format_opt) est.format = format;
      if (est.format != "text" && est.format != "json" && est.format != "markdown") {
        throw renewest::error(errc::bad_config, "estimate: --format must be text, json, or markdown");
      }
      return run_estimate(est);
    }
    if (simulate->parsed()) {
      if (*seed_opt) sim.seed = seed;
      if (*out_opt) sim.out = out;
      if (*format_opt) sim.format = format;
      if (sim.format != "json" && sim.format != "csv") {
        throw renewest::error(errc::bad_config, "simulate: --format must be json or csv");
      }
      return run_simulate(sim);
    }
    if (*seed_opt) rep.seed = seed;
    if (*runs_opt) rep.runs = runs;
    if (*out_opt) rep.out_dir = out;
    if (*format_opt) rep.format = format;
    if (rep.format != "csv" && rep.format != "markdown") {
      throw renewest::error(errc::bad_config, "reproduce: --format must be csv or markdown");
    }
    return run_reproduce(rep);
  } catch (const renewest::error& e) {
    std::cerr << "error[" << renewest::errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
