#pragma once

#include <cstdint>
#include <string_view>

namespace treealpha {

/// Splitmix-style 64-bit PRNG. One user-facing seed drives every generator;
/// sub-streams are derived by hashing a component label into the seed, so
/// adding a draw in one component never shifts another component's stream.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n). n > 0.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  /// Uniform integer in [lo, hi] inclusive.
  long long next_int(long long lo, long long hi) {
    return lo + static_cast<long long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

/// Derives an independent stream for (seed, label).
inline SplitMix64 split_stream(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  SplitMix64 mix(seed ^ h);
  mix.next();
  return mix;
}

}  // namespace treealpha
