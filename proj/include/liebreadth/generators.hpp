#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "liebreadth/algebra.hpp"

namespace liebreadth {

/// Invertible n x n matrix with entries in [-bound, bound] (uniform residues
/// over GF(p)). Deterministic per seed; GeneratorStuck after 1000 singular draws.
Matrix random_invertible(std::size_t n, Field field, std::int64_t bound, std::uint64_t seed);

/// Integer matrix of determinant +-1 with a small integer inverse: a product
/// of random unit lower and upper triangular factors and a permutation.
Matrix random_unimodular(std::size_t n, std::int64_t bound, std::uint64_t seed);

/// A (x) V with dim A = m acting on dim V = k through polynomials in one random
/// upper-triangular matrix, then conjugated by random_invertible(m + k, field, 2, .).
StructureTensor random_solvable(std::size_t m, std::size_t k, Field field, std::int64_t bound, std::uint64_t seed);

/// Random conjugate of a direct sum of 0..max_blocks HeisenbergCentral(k, 1)
/// blocks (k in 1..2) and an abelian part of dimension 0..2; never empty.
StructureTensor random_nilpotent(std::uint64_t seed, Field field = Field::rationals(), std::size_t max_blocks = 2);

/// direct_sum(L, abelian(m)); m >= 1.
StructureTensor add_abelian_summand(const StructureTensor& L, std::size_t m);

struct EnumerationStats {
  std::uint64_t total = 0;
  std::uint64_t jacobi_ok = 0;
  std::map<std::size_t, std::uint64_t> breadth_histogram;
};

/// Visits every antisymmetric tensor over GF(p) in dimension n and calls
/// `visit(L, b(L))` on those satisfying Jacobi. Work is split into shards by
/// the coefficients of the first pair; with jobs > 1 the visitor runs on
/// several threads and must be thread-safe. Throws BudgetExceeded when
/// p^(n * n(n-1)/2) exceeds `budget`.
EnumerationStats enumerate_gfp(std::int64_t p, std::size_t n,
                               const std::function<void(const StructureTensor&, std::size_t)>& visit,
                               unsigned jobs = 1, std::uint64_t budget = 20'000'000);

}  // namespace liebreadth
