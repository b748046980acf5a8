#pragma once

#include <cstdint>

#include "chimeraq/error.hpp"

namespace chimeraq {

// SplitMix64. The generator is pinned down by its update equations so that
// any language reproduces the same instance files bit for bit:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
//
// The initial state is the seed itself. Derived draws:
//   * pm1(): bit 63 of the next output; 1 -> +1, 0 -> -1.
//   * uniform_int(lo, hi): rejection sampling on the raw 64-bit output
//     (reject outputs below 2^64 mod span, then reduce mod span), so there
//     is no modulo bias.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  int pm1() { return (next() >> 63) ? 1 : -1; }

  long long uniform_int(long long lo, long long hi) {
    if (lo > hi) throw Error(ErrorCode::invalid_range, "lo > hi");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<long long>(next());  // full 64-bit range
    const std::uint64_t reject_below = (0 - span) % span;  // 2^64 mod span
    std::uint64_t r = next();
    while (r < reject_below) r = next();
    return static_cast<long long>(static_cast<std::uint64_t>(lo) + r % span);
  }

  // Uniform index in [0, n), n >= 1.
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(uniform_int(0, static_cast<long long>(n) - 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace chimeraq
