#pragma once

#include <cstdint>

#include "hypertrees/numeric.hpp"

namespace hypertrees {

/// xoshiro256** seeded through splitmix64. Stream splitting hashes the
/// draw index into the seed, so (seed, stream) pairs give independent,
/// platform-independent bit streams: run outputs are reproducible
/// byte for byte anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  /// Unbiased integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// 53-bit uniform double in [0, 1).
  double next_double();

 private:
  std::uint64_t s_[4];
};

/// Exact Bernoulli(p) for rational p, consuming 64-bit chunks of a uniform
/// binary expansion until the comparison is decided (one chunk almost
/// always suffices).
bool bernoulli_exact(Rng& rng, const Rational& p);

}  // namespace hypertrees
