#include <bit>
#include <cmath>
#include <cstring>

#include "renewest/kernels.hpp"

namespace renewest::kernels {

std::vector<std::uint64_t> pack_bits(const std::uint8_t* flags, std::size_t v) {
  const std::size_t words = (v + 63) / 64;
  std::vector<std::uint64_t> packed(words + 4, 0);
  for (std::size_t i = 0; i < v; ++i) {
    if (flags[i]) packed[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return packed;
}

namespace scalar {

// Level k holds bit i = AND of flags[i..i+k-1]; bits at i > v-k are ANDs that
// reach past the end and stay zero, so a popcount over all words counts
// exactly the valid window starts. Once a level is empty every longer window
// is empty too.
void count_all_true_windows(const std::uint8_t* flags, std::size_t v, std::uint64_t* counts) {
  std::memset(counts, 0, v * sizeof(std::uint64_t));
  if (v == 0) return;

  std::vector<std::uint64_t> cur = pack_bits(flags, v);
  const std::size_t words = (v + 63) / 64;

  std::uint64_t count = 0;
  for (std::size_t j = 0; j < words; ++j) count += std::popcount(cur[j]);
  counts[0] = count;

  for (std::size_t k = 2; k <= v && count != 0; ++k) {
    count = 0;
    for (std::size_t j = 0; j < words; ++j) {
      const std::uint64_t w = cur[j] & ((cur[j] >> 1) | (cur[j + 1] << 63));
      cur[j] = w;
      count += std::popcount(w);
    }
    counts[k - 1] = count;
  }
}

double sup_abs_diff_pwl_uniform(const double* knots, std::size_t nk, std::size_t steps_per_knot,
                                const double* reference, std::size_t n) {
  const double inv_m = 1.0 / static_cast<double>(steps_per_knot);
  double best = 0.0;
  std::size_t j = 0;
  for (std::size_t q = 0; q + 1 < nk && j < n; ++q) {
    const double k0 = knots[q];
    const double dk = knots[q + 1] - knots[q];
    for (std::size_t r = 0; r < steps_per_knot && j < n; ++r, ++j) {
      const double est = k0 + dk * (static_cast<double>(r) * inv_m);
      const double d = std::fabs(est - reference[j]);
      if (d > best) best = d;
    }
  }
  const double last = nk > 0 ? knots[nk - 1] : 0.0;
  for (; j < n; ++j) {
    const double d = std::fabs(last - reference[j]);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace scalar
}  // namespace renewest::kernels
