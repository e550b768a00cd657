#pragma once

#include <cstdint>
#include <random>

namespace renewest {

using RngEngine = std::mt19937_64;

// splitmix64 finalizer; good avalanche for seed derivation.
inline std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Seed for run `run` of experiment cell `cell`. Pure function of its inputs,
// so parallel and serial execution derive identical streams.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t cell, std::uint64_t run) noexcept {
  std::uint64_t x = mix64(master_seed ^ (0x9e3779b97f4a7c15ULL * (cell + 1)));
  return mix64(x ^ (0xc2b2ae3d27d4eb4fULL * (run + 1)));
}

// Uniform draw on the open interval (0, 1): 53-bit mantissa, zero rejected so
// -ln(u) is always finite and positive.
inline double open_unit(RngEngine& engine) {
  for (;;) {
    const std::uint64_t bits = engine() >> 11;
    if (bits != 0) return static_cast<double>(bits) * 0x1p-53;
  }
}

}  // namespace renewest
