#pragma once

// Independent reference implementations used only to check the production
// code. Deliberately written as directly as possible, with no shared code
// paths with src/.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

// Direct overlapping-window counts: windows of k consecutive nonzero flags.
inline std::vector<std::uint64_t> window_counts(const std::vector<std::uint8_t>& flags) {
  const std::size_t v = flags.size();
  std::vector<std::uint64_t> counts(v, 0);
  for (std::size_t k = 1; k <= v; ++k) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i + k <= v; ++i) {
      bool all = true;
      for (std::size_t j = i; j < i + k; ++j) {
        if (!flags[j]) {
          all = false;
          break;
        }
      }
      if (all) ++count;
    }
    counts[k - 1] = count;
  }
  return counts;
}

// Survival values straight from the definition: count / (v - k + 1), lag 0 = 1.
inline std::vector<double> survival(const std::vector<std::uint8_t>& flags) {
  const std::size_t v = flags.size();
  const auto counts = window_counts(flags);
  std::vector<double> values(v + 1);
  values[0] = 1.0;
  for (std::size_t k = 1; k <= v; ++k) {
    values[k] = static_cast<double>(counts[k - 1]) / static_cast<double>(v - k + 1);
  }
  return values;
}

inline std::vector<std::uint8_t> random_flags(std::mt19937_64& rng, std::size_t length,
                                              double true_probability) {
  std::vector<std::uint8_t> flags(length);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& flag : flags) flag = unit(rng) < true_probability ? 1 : 0;
  return flags;
}

// Composite Simpson quadrature of f over [0, b].
template <typename F>
double simpson(F&& f, double b, std::size_t panels = 2000) {
  if (b <= 0.0) return 0.0;
  const double h = b / static_cast<double>(2 * panels);
  double sum = f(0.0) + f(b);
  for (std::size_t i = 1; i < 2 * panels; ++i) {
    sum += f(static_cast<double>(i) * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

// Equilibrium forward-recurrence Cdf for a Weibull renewal process:
// G(x) = (1/mu) * integral_0^x exp(-(u/alpha)^beta) du.
inline double forward_recurrence_cdf(double alpha, double beta, double x) {
  const double mu = alpha * std::tgamma(1.0 + 1.0 / beta);
  const double integral =
      simpson([&](double u) { return std::exp(-std::pow(u / alpha, beta)); }, x);
  return integral / mu;
}

// Two-sided Kolmogorov-Smirnov distance between a sample and a Cdf.
template <typename Cdf>
double ks_distance(std::vector<double> sample, Cdf&& cdf) {
  std::sort(sample.begin(), sample.end());
  const auto n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double value = cdf(sample[i]);
    d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - value));
    d = std::max(d, std::fabs(value - static_cast<double>(i) / n));
  }
  return d;
}

struct MeanAndSd {
  double mean = 0.0;
  double sd = 0.0;
};

inline MeanAndSd mean_and_sd(const std::vector<double>& sample) {
  const auto n = static_cast<double>(sample.size());
  double mean = 0.0;
  for (double x : sample) mean += x;
  mean /= n;
  double ss = 0.0;
  for (double x : sample) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace oracles
