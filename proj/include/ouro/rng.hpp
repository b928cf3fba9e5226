#pragma once

#include <cstdint>
#include <random>

namespace ouro {

// Deterministic generator with explicit mappings to [0,1), integer ranges
// and the usual continuous families. std::*_distribution is implementation
// defined, so all mappings are written out here to keep output stable
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform on [0,1), 53-bit resolution
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + uniform01() * (hi - lo);
  }

  // inclusive, rejection sampled to avoid modulo bias
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next_u64());  // full range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % range);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ouro
