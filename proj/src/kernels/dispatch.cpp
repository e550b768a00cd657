#include <atomic>

#include "renewest/errors.hpp"
#include "renewest/kernels.hpp"

namespace renewest::kernels {

namespace {

bool detect_avx2() noexcept {
#if defined(RENEWEST_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

std::atomic<Backend> g_backend{detect_avx2() ? Backend::avx2 : Backend::scalar};

}  // namespace

bool avx2_supported() noexcept { return detect_avx2(); }

Backend active_backend() noexcept { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (backend == Backend::avx2 && !avx2_supported()) {
    throw error(errc::invalid_input, "avx2 backend not available on this machine/build");
  }
  g_backend.store(backend, std::memory_order_relaxed);
}

const char* backend_name(Backend backend) noexcept {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

void count_all_true_windows(const std::uint8_t* flags, std::size_t v, std::uint64_t* counts) {
#if defined(RENEWEST_HAVE_AVX2)
  if (active_backend() == Backend::avx2) {
    avx2::count_all_true_windows(flags, v, counts);
    return;
  }
#endif
  scalar::count_all_true_windows(flags, v, counts);
}

double sup_abs_diff_pwl_uniform(const double* knots, std::size_t nk, std::size_t steps_per_knot,
                                const double* reference, std::size_t n) {
#if defined(RENEWEST_HAVE_AVX2)
  if (active_backend() == Backend::avx2) {
    return avx2::sup_abs_diff_pwl_uniform(knots, nk, steps_per_knot, reference, n);
  }
#endif
  return scalar::sup_abs_diff_pwl_uniform(knots, nk, steps_per_knot, reference, n);
}

}  // namespace renewest::kernels
