#pragma once

// Deterministic counter-based randomness (splitmix64).  Every randomized
// suite derives all draws from one seed so reports are reproducible
// byte-for-byte; splitting off independent streams is just seeding a child
// with the next value.

#include "field.hpp"

#include <cstdint>

namespace ortho_hecke {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  SplitMix64 split() { return SplitMix64(next()); }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  // uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rat rat(std::int64_t num_bound, std::int64_t den_bound) {
    const std::int64_t n = range(-num_bound, num_bound);
    const std::int64_t d = range(1, den_bound);
    return Rat(n) / Rat(d);
  }

  Fp fp(std::int64_t p) { return Fp(static_cast<std::int64_t>(below(p)), p); }
};

}  // namespace ortho_hecke
