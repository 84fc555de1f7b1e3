// rng.hpp — the deterministic PRNG used by every randomized component.
//
// splitmix64 (Steele, Lea, Flood 2014). All sampling in the library derives
// from this generator so that any report is reproducible from its seed alone;
// the exact update and the modulo reduction below are part of the documented
// output contract.
#pragma once

#include <cstdint>

namespace inertia {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough value in [0, bound); bound must be nonzero. The modulo
  // bias is irrelevant at the bounds used here (< 2^6) and keeping the
  // reduction trivial makes the stream easy to re-implement.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Signed integer in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace inertia
