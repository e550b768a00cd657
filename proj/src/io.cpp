#include "renewest/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "renewest/errors.hpp"

namespace renewest {

namespace {

using json = nlohmann::ordered_json;

std::string format_full(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_short(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%g", value);
  return buffer;
}

std::string format_cell(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::uint8_t parse_flag(const json& value, const char* context) {
  if (value.is_boolean()) return value.get<bool>() ? 1 : 0;
  if (value.is_number_integer()) {
    const auto n = value.get<long long>();
    if (n == 0 || n == 1) return static_cast<std::uint8_t>(n);
  }
  throw error(errc::invalid_input, std::string(context) + ": indicators must be 0, 1, or booleans");
}

template <typename T>
std::vector<T> number_list(const json& value, const char* context) {
  if (!value.is_array() || value.empty()) {
    throw error(errc::bad_config, std::string(context) + ": expected a nonempty array of numbers");
  }
  std::vector<T> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_number()) {
      throw error(errc::bad_config, std::string(context) + ": expected a nonempty array of numbers");
    }
    out.push_back(item.get<T>());
  }
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_failure, "cannot open file for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw error(errc::io_failure, "failed while reading: " + path);
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::io_failure, "cannot open file for writing: " + path);
  out << content;
  if (!out) throw error(errc::io_failure, "failed while writing: " + path);
}

IndicatorSeries parse_indicator_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw error(errc::invalid_input, std::string("indicator file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("t") || !doc.contains("indicators")) {
    throw error(errc::invalid_input, "indicator file: expected {\"t\": <number>, \"indicators\": [...]}");
  }
  if (!doc["t"].is_number()) {
    throw error(errc::invalid_input, "indicator file: \"t\" must be a positive number");
  }
  if (!doc["indicators"].is_array()) {
    throw error(errc::invalid_input, "indicator file: \"indicators\" must be an array");
  }

  IndicatorSeries series;
  series.interval = doc["t"].get<double>();
  series.indicators.reserve(doc["indicators"].size());
  for (const auto& value : doc["indicators"]) {
    series.indicators.push_back(parse_flag(value, "indicator file"));
  }
  series.validate();
  return series;
}

IndicatorSeries parse_indicator_csv(const std::string& text, std::optional<double> interval_override) {
  std::istringstream in(text);
  std::string line;
  IndicatorSeries series;
  series.interval = interval_override.value_or(0.0);

  bool header_seen = false;
  while (std::getline(in, line)) {
    const std::string row = trim(line);
    if (row.empty()) continue;
    if (row[0] == '#') {
      const auto pos = row.find("t=");
      if (pos != std::string::npos && !interval_override) {
        try {
          series.interval = std::stod(row.substr(pos + 2));
        } catch (const std::exception&) {
          throw error(errc::invalid_input, "indicator csv: malformed '# t=' comment");
        }
      }
      continue;
    }
    if (!header_seen) {
      std::string compact;
      for (char c : row) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
      }
      if (compact != "interval,empty") {
        throw error(errc::invalid_input, "indicator csv: expected header 'interval,empty'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = row.find(',');
    if (comma == std::string::npos) {
      throw error(errc::invalid_input, "indicator csv: expected rows 'index,flag'");
    }
    const std::string flag = trim(row.substr(comma + 1));
    if (flag == "0") {
      series.indicators.push_back(0);
    } else if (flag == "1") {
      series.indicators.push_back(1);
    } else {
      throw error(errc::invalid_input, "indicator csv: the 'empty' column must be 0 or 1");
    }
  }
  if (!header_seen) throw error(errc::invalid_input, "indicator csv: missing 'interval,empty' header");
  if (series.interval <= 0.0) {
    throw error(errc::invalid_input,
                "indicator csv: interval length missing; add a '# t=<value>' line or pass --interval");
  }
  series.validate();
  return series;
}

IndicatorSeries load_indicator_series(const std::string& path, std::optional<double> interval_override) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return parse_indicator_json(text);
  }
  return parse_indicator_csv(text, interval_override);
}

std::string indicator_series_to_json(const IndicatorSeries& series) {
  json doc;
  doc["t"] = series.interval;
  doc["indicators"] = json::array();
  for (auto flag : series.indicators) doc["indicators"].push_back(static_cast<int>(flag));
  return doc.dump(2) + "\n";
}

std::string indicator_series_to_csv(const IndicatorSeries& series) {
  std::ostringstream out;
  out << "# t=" << format_full(series.interval) << "\n";
  out << "interval,empty\n";
  for (std::size_t i = 0; i < series.indicators.size(); ++i) {
    out << (i + 1) << ',' << static_cast<int>(series.indicators[i]) << "\n";
  }
  return out.str();
}

std::string event_trace_to_json(const EventTrace& trace) {
  json doc;
  doc["horizon"] = trace.horizon;
  doc["epochs"] = trace.epochs;
  return doc.dump(2) + "\n";
}

ExperimentConfig parse_experiment_config_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw error(errc::bad_config, std::string("experiment config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw error(errc::bad_config, "experiment config: expected a JSON object");

  ExperimentConfig config = ExperimentConfig::defaults();
  if (doc.contains("distributions")) {
    const auto& list = doc["distributions"];
    if (!list.is_array() || list.empty()) {
      throw error(errc::bad_config, "experiment config: distributions must be a nonempty array");
    }
    config.distributions.clear();
    std::size_t index = 1;
    for (const auto& item : list) {
      if (!item.is_object() || !item.contains("alpha") || !item.contains("beta") ||
          !item["alpha"].is_number() || !item["beta"].is_number()) {
        throw error(errc::bad_config, "experiment config: each distribution needs numeric alpha and beta");
      }
      LabeledSpec dist;
      dist.spec.alpha = item["alpha"].get<double>();
      dist.spec.beta = item["beta"].get<double>();
      dist.label = item.contains("label") ? item["label"].get<std::string>() : std::to_string(index);
      config.distributions.push_back(std::move(dist));
      ++index;
    }
  }
  if (doc.contains("horizons")) config.horizons = number_list<double>(doc["horizons"], "horizons");
  if (doc.contains("intervals")) config.intervals = number_list<double>(doc["intervals"], "intervals");
  if (doc.contains("runs")) {
    if (!doc["runs"].is_number_integer() || doc["runs"].get<long long>() < 1) {
      throw error(errc::bad_config, "experiment config: runs must be a positive integer");
    }
    config.runs = doc["runs"].get<std::size_t>();
  }
  if (doc.contains("master_seed")) {
    if (!doc["master_seed"].is_number_integer()) {
      throw error(errc::bad_config, "experiment config: master_seed must be an integer");
    }
    config.master_seed = doc["master_seed"].get<std::uint64_t>();
  }
  if (doc.contains("warmup")) {
    if (!doc["warmup"].is_number()) throw error(errc::bad_config, "experiment config: warmup must be a number");
    config.warmup = doc["warmup"].get<double>();
  }
  if (doc.contains("grid_step_divisor")) {
    if (!doc["grid_step_divisor"].is_number()) {
      throw error(errc::bad_config, "experiment config: grid_step_divisor must be a number");
    }
    config.grid_step_divisor = doc["grid_step_divisor"].get<double>();
  }
  config.validate();
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  return parse_experiment_config_json(read_file(path));
}

std::string experiment_config_to_json(const ExperimentConfig& config) {
  json doc;
  doc["distributions"] = json::array();
  for (const auto& dist : config.distributions) {
    doc["distributions"].push_back({{"alpha", dist.spec.alpha}, {"beta", dist.spec.beta}, {"label", dist.label}});
  }
  doc["horizons"] = config.horizons;
  doc["intervals"] = config.intervals;
  doc["runs"] = config.runs;
  doc["master_seed"] = config.master_seed;
  doc["warmup"] = config.warmup;
  doc["grid_step_divisor"] = config.grid_step_divisor;
  return doc.dump(2) + "\n";
}

namespace {

struct CellOrder {
  std::vector<double> horizons;
  std::vector<double> intervals;
  std::vector<std::string> labels;
};

CellOrder first_seen_order(const std::vector<CellResult>& cells) {
  CellOrder order;
  for (const auto& cell : cells) {
    if (std::find(order.horizons.begin(), order.horizons.end(), cell.horizon) == order.horizons.end()) {
      order.horizons.push_back(cell.horizon);
    }
    if (std::find(order.intervals.begin(), order.intervals.end(), cell.interval) == order.intervals.end()) {
      order.intervals.push_back(cell.interval);
    }
    if (std::find(order.labels.begin(), order.labels.end(), cell.dist_label) == order.labels.end()) {
      order.labels.push_back(cell.dist_label);
    }
  }
  return order;
}

const CellResult* find_cell(const std::vector<CellResult>& cells, double horizon, double interval,
                            const std::string& label) {
  for (const auto& cell : cells) {
    if (cell.horizon == horizon && cell.interval == interval && cell.dist_label == label) return &cell;
  }
  return nullptr;
}

}  // namespace

std::string cells_to_csv(const std::vector<CellResult>& cells, Metric metric) {
  const CellOrder order = first_seen_order(cells);
  std::ostringstream out;
  out << "T,t,dist_label,metric,failed_runs\n";
  for (double horizon : order.horizons) {
    for (double interval : order.intervals) {
      for (const auto& label : order.labels) {
        const CellResult* cell = find_cell(cells, horizon, interval, label);
        if (cell == nullptr) continue;
        out << format_short(horizon) << ',' << format_short(interval) << ',' << label << ',';
        if (cell->all_failed()) {
          out << "NA";
        } else {
          out << format_full(cell_metric(*cell, metric));
        }
        out << ',' << cell->runs_failed << "\n";
      }
    }
  }
  return out.str();
}

std::string factor_means_to_csv(const std::vector<CellResult>& cells) {
  std::ostringstream out;
  out << "table,factor,level,mean\n";
  const std::pair<Metric, const char*> tables[] = {{Metric::cdf_diff, "cdf_diff"},
                                                   {Metric::mean_diff, "mean_diff"}};
  for (const auto& [metric, name] : tables) {
    const FactorMeans means = factor_means(cells, metric);
    for (const auto& [label, value] : means.by_distribution) {
      out << name << ",distribution," << label << ',' << format_full(value) << "\n";
    }
    for (const auto& [horizon, value] : means.by_horizon) {
      out << name << ",T," << format_short(horizon) << ',' << format_full(value) << "\n";
    }
    for (const auto& [interval, value] : means.by_interval) {
      out << name << ",t," << format_short(interval) << ',' << format_full(value) << "\n";
    }
    out << name << ",grand,all," << format_full(means.grand) << "\n";
  }
  return out.str();
}

std::string cells_to_markdown(const std::vector<CellResult>& cells, Metric metric,
                              const std::string& title) {
  const CellOrder order = first_seen_order(cells);
  std::ostringstream out;
  out << "### " << title << "\n\n";
  out << "| T | t |";
  for (const auto& label : order.labels) out << ' ' << label << " |";
  out << "\n|---|---|";
  for (std::size_t i = 0; i < order.labels.size(); ++i) out << "---|";
  out << "\n";
  for (double horizon : order.horizons) {
    for (double interval : order.intervals) {
      out << "| " << format_short(horizon) << " | " << format_short(interval) << " |";
      for (const auto& label : order.labels) {
        const CellResult* cell = find_cell(cells, horizon, interval, label);
        if (cell == nullptr || cell->all_failed()) {
          out << " NA |";
        } else {
          out << ' ' << format_cell(cell_metric(*cell, metric)) << " |";
        }
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string factor_means_to_markdown(const std::vector<CellResult>& cells, Metric metric,
                                     const std::string& title) {
  const FactorMeans means = factor_means(cells, metric);
  std::ostringstream out;
  out << "### " << title << "\n\n";
  out << "| factor | level | mean |\n|---|---|---|\n";
  for (const auto& [label, value] : means.by_distribution) {
    out << "| distribution | " << label << " | " << format_cell(value) << " |\n";
  }
  for (const auto& [horizon, value] : means.by_horizon) {
    out << "| T | " << format_short(horizon) << " | " << format_cell(value) << " |\n";
  }
  for (const auto& [interval, value] : means.by_interval) {
    out << "| t | " << format_short(interval) << " | " << format_cell(value) << " |\n";
  }
  out << "| grand | all | " << format_cell(means.grand) << " |\n";
  return out.str();
}

}  // namespace renewest
