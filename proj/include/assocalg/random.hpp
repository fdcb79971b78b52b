#pragma once

// Deterministic pseudo-randomness. splitmix64 rather than <random>
// distributions so that sampled values are identical across standard
// library implementations.

#include <cstdint>
#include <string_view>

#include "assocalg/scalar.hpp"

namespace assocalg {

class seeded_rng {
 public:
  explicit seeded_rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish index in [0, n); n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  /// Integer in [lo, hi].
  long between(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/// Mixes a base seed with a textual tag (entry id, check name, ...), so that
/// each sub-computation gets its own stream independent of run order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : tag) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  seeded_rng mix(seed ^ h);
  return mix.next();
}

/// Small-height rational: numerator in [-h, h], denominator in [1, d].
inline Scalar small_rational(seeded_rng& rng, long h, long d) {
  return Scalar::fraction(rng.between(-h, h), rng.between(1, d));
}

}  // namespace assocalg
