#include "liebreadth/random.hpp"

namespace liebreadth {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

SeedStream::SeedStream(std::uint64_t seed, std::uint64_t index)
    : seed_(seed), index_(index), engine_(make_engine(seed, index)) {}

SeedStream SeedStream::split(std::uint64_t index) const {
  // mix the parent index in so nested splits stay distinct
  return SeedStream(seed_ ^ (index_ * 0x9e3779b97f4a7c15ULL), index + 1);
}

std::int64_t SeedStream::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Scalar random_scalar(Field F, std::int64_t bound, SeedStream& stream) {
  if (bound < 2) throw Error(ErrorKind::BadParameter, "random_scalar bound must be at least 2");
  if (F.is_prime()) return Scalar(F, static_cast<long>(stream.uniform(0, F.modulus() - 1)));
  return Scalar(F, static_cast<long>(stream.uniform(-bound, bound)));
}

}  // namespace liebreadth
