#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace renewest {

enum class errc {
  invalid_input,              // malformed or out-of-contract caller data
  horizon_insufficient,       // survival curve never reaches three consecutive zeros
  degenerate_normalization,   // mean-estimate denominator <= 0
  invalid_partition,          // horizon not an integer multiple of the interval
  bad_config,                 // experiment/CLI configuration rejected
  io_failure,                 // file could not be read or written
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// The observation period is too short relative to event sparsity: no cutoff
// K with p(K-2) = p(K-1) = p(K) = 0 exists. Carries the largest index with
// p = 0, when the curve has any zeros at all.
class horizon_insufficient_error : public error {
 public:
  horizon_insufficient_error(const std::string& what, std::optional<std::size_t> last_zero_index)
      : error(errc::horizon_insufficient, what), last_zero_index_(last_zero_index) {}
  std::optional<std::size_t> last_zero_index() const noexcept { return last_zero_index_; }

 private:
  std::optional<std::size_t> last_zero_index_;
};

// The trapezoid normalization sum reached or exceeded 1, which would force a
// nonpositive mean estimate. Carries the offending sum.
class degenerate_normalization_error : public error {
 public:
  degenerate_normalization_error(const std::string& what, double density_sum)
      : error(errc::degenerate_normalization, what), density_sum_(density_sum) {}
  double density_sum() const noexcept { return density_sum_; }

 private:
  double density_sum_;
};

// True for the error categories a Monte Carlo harness counts as failed runs
// rather than configuration mistakes.
inline bool is_estimation_failure(errc code) noexcept {
  return code == errc::horizon_insufficient || code == errc::degenerate_normalization;
}

}  // namespace renewest
