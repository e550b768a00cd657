#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Data-parallel inner loops used by the estimator and the evaluation metric.
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant selected at runtime. The variants are required to produce
// bit-identical results; tests enforce this.
namespace renewest::kernels {

enum class Backend { scalar, avx2 };

// Backend picked by cpuid at startup (or overridden via set_backend).
Backend active_backend() noexcept;

// Force a backend. Throws error(errc::invalid_input) if it is not available
// on this machine/build.
void set_backend(Backend backend);

bool avx2_supported() noexcept;
const char* backend_name(Backend backend) noexcept;

// counts[k-1] = number of start positions i in [0, v-k] such that
// flags[i..i+k-1] are all nonzero, for k = 1..v. Entries after the first
// all-zero level are zero (longer windows cannot exist). counts must hold v
// elements. Internally bit-packed: one AND of the level with itself shifted
// by one position, plus a popcount, per level.
void count_all_true_windows(const std::uint8_t* flags, std::size_t v, std::uint64_t* counts);

// Max over j = 0..n-1 of |pwl(j) - reference[j]| where pwl(j) interpolates
// uniformly spaced knots with steps_per_knot grid steps per knot interval:
//   q = j / steps_per_knot, r = j % steps_per_knot,
//   pwl(j) = knots[q] + (knots[q+1] - knots[q]) * (r / steps_per_knot)
// and pwl(j) = knots[nk-1] once q+1 >= nk (constant extension).
double sup_abs_diff_pwl_uniform(const double* knots, std::size_t nk, std::size_t steps_per_knot,
                                const double* reference, std::size_t n);

namespace scalar {
void count_all_true_windows(const std::uint8_t* flags, std::size_t v, std::uint64_t* counts);
double sup_abs_diff_pwl_uniform(const double* knots, std::size_t nk, std::size_t steps_per_knot,
                                const double* reference, std::size_t n);
}  // namespace scalar

#if defined(RENEWEST_HAVE_AVX2)
namespace avx2 {
void count_all_true_windows(const std::uint8_t* flags, std::size_t v, std::uint64_t* counts);
double sup_abs_diff_pwl_uniform(const double* knots, std::size_t nk, std::size_t steps_per_knot,
                                const double* reference, std::size_t n);
}  // namespace avx2
#endif

// Packs flags into 64-bit words, least significant bit first, padded with at
// least four zero sentinel words so shifted vector loads stay in bounds.
std::vector<std::uint64_t> pack_bits(const std::uint8_t* flags, std::size_t v);

}  // namespace renewest::kernels
