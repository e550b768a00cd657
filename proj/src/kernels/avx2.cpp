#include "renewest/kernels.hpp"

#if defined(RENEWEST_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstring>

namespace renewest::kernels::avx2 {

namespace {

inline std::uint64_t popcount4(const std::uint64_t* w) {
  return static_cast<std::uint64_t>(_mm_popcnt_u64(w[0])) + static_cast<std::uint64_t>(_mm_popcnt_u64(w[1])) +
         static_cast<std::uint64_t>(_mm_popcnt_u64(w[2])) + static_cast<std::uint64_t>(_mm_popcnt_u64(w[3]));
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m2 = _mm_max_pd(lo, hi);
  const __m128d m1 = _mm_max_sd(m2, _mm_unpackhi_pd(m2, m2));
  return _mm_cvtsd_f64(m1);
}

}  // namespace

void count_all_true_windows(const std::uint8_t* flags, std::size_t v, std::uint64_t* counts) {
  std::memset(counts, 0, v * sizeof(std::uint64_t));
  if (v == 0) return;

  std::vector<std::uint64_t> cur = pack_bits(flags, v);  // 4 zero sentinel words appended
  const std::size_t words = (v + 63) / 64;

  std::uint64_t count = 0;
  {
    std::size_t j = 0;
    for (; j + 4 <= words; j += 4) count += popcount4(&cur[j]);
    for (; j < words; ++j) count += static_cast<std::uint64_t>(_mm_popcnt_u64(cur[j]));
  }
  counts[0] = count;

  for (std::size_t k = 2; k <= v && count != 0; ++k) {
    count = 0;
    std::size_t j = 0;
    for (; j + 4 <= words; j += 4) {
      // Loads at j and j+1 both read pre-update level k-1 values: stores land
      // at j..j+3 after the j+1..j+4 load, and later blocks only read >= j+4.
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&cur[j]));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&cur[j + 1]));
      const __m256i shifted = _mm256_or_si256(_mm256_srli_epi64(a, 1), _mm256_slli_epi64(b, 63));
      const __m256i w = _mm256_and_si256(a, shifted);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(&cur[j]), w);
      count += popcount4(&cur[j]);
    }
    for (; j < words; ++j) {
      const std::uint64_t w = cur[j] & ((cur[j] >> 1) | (cur[j + 1] << 63));
      cur[j] = w;
      count += static_cast<std::uint64_t>(_mm_popcnt_u64(w));
    }
    counts[k - 1] = count;
  }
}

double sup_abs_diff_pwl_uniform(const double* knots, std::size_t nk, std::size_t steps_per_knot,
                                const double* reference, std::size_t n) {
  const double inv_m = 1.0 / static_cast<double>(steps_per_knot);
  std::vector<double> frac(steps_per_knot);
  for (std::size_t r = 0; r < steps_per_knot; ++r) frac[r] = static_cast<double>(r) * inv_m;

  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d best4 = _mm256_setzero_pd();
  double best = 0.0;

  std::size_t j = 0;
  for (std::size_t q = 0; q + 1 < nk && j < n; ++q) {
    const double k0 = knots[q];
    const double dk = knots[q + 1] - knots[q];
    const __m256d k0v = _mm256_set1_pd(k0);
    const __m256d dkv = _mm256_set1_pd(dk);
    std::size_t r = 0;
    for (; r + 4 <= steps_per_knot && j + 4 <= n; r += 4, j += 4) {
      const __m256d fr = _mm256_loadu_pd(&frac[r]);
      const __m256d est = _mm256_add_pd(k0v, _mm256_mul_pd(dkv, fr));
      const __m256d d = _mm256_and_pd(abs_mask, _mm256_sub_pd(est, _mm256_loadu_pd(&reference[j])));
      best4 = _mm256_max_pd(best4, d);
    }
    for (; r < steps_per_knot && j < n; ++r, ++j) {
      const double est = k0 + dk * frac[r];
      const double d = std::fabs(est - reference[j]);
      if (d > best) best = d;
    }
  }

  const double last = nk > 0 ? knots[nk - 1] : 0.0;
  const __m256d lastv = _mm256_set1_pd(last);
  for (; j + 4 <= n; j += 4) {
    const __m256d d = _mm256_and_pd(abs_mask, _mm256_sub_pd(lastv, _mm256_loadu_pd(&reference[j])));
    best4 = _mm256_max_pd(best4, d);
  }
  for (; j < n; ++j) {
    const double d = std::fabs(last - reference[j]);
    if (d > best) best = d;
  }

  return std::max(best, hmax(best4));
}

}  // namespace renewest::kernels::avx2

#endif  // RENEWEST_HAVE_AVX2
