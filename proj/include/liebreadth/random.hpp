#pragma once

#include <cstdint>
#include <random>

#include "liebreadth/field.hpp"

namespace liebreadth {

/// Deterministic random stream. Streams derived with split() from the same
/// (seed, index) are identical and independent of how much the parent drew.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed, std::uint64_t index = 0);

  std::uint64_t seed() const { return seed_; }
  SeedStream split(std::uint64_t index) const;

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t index_;
  std::mt19937_64 engine_;
};

/// Uniform integer in [-bound, bound] embedded in F; a uniform residue over GF(p).
Scalar random_scalar(Field F, std::int64_t bound, SeedStream& stream);

}  // namespace liebreadth
