#pragma once

#include <cstdint>
#include <random>

#include "tropgr/rational.hpp"

namespace tropgr {

// Deterministic RNG handed explicitly to every randomized operation so
// retries and samples are reproducible from a single seed.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  long uniform(long lo, long hi) {  // inclusive bounds
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng);
  }

  // uniform rational p/q with p in [lo,hi], q in [1,maxden]
  Rational rational(long lo, long hi, long maxden = 1) {
    return rat(uniform(lo, hi), uniform(1, maxden));
  }

  // strictly positive rational, used for generic leading coefficients
  Rational positive(long hi = 9) { return rat(uniform(1, hi), uniform(1, 4)); }

  bool coin() { return uniform(0, 1) == 1; }
};

}  // namespace tropgr
