#pragma once

// Deterministic pseudo-random sampling for the randomized identity drivers.
//
// The standard <random> distributions are not pinned across library
// implementations, so reports produced with the same seed could differ
// between platforms.  splitmix64 plus explicit rejection sampling keeps the
// sampled parameter streams byte-reproducible everywhere.

#include <cstdint>

namespace mlv {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] via rejection; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());  // full range
    const std::uint64_t limit = (~0ULL / span) * span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  // Uniform double in [0, 1) with 53 bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Stable per-point seed derivation: mixing the point index through the output
// function decorrelates streams, so parallel workers can evaluate parameter
// points in any order without changing the values each point sees.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL));
  return g.next();
}

}  // namespace mlv
