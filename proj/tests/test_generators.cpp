#include <gtest/gtest.h>

#include <mutex>

#include "liebreadth/breadth.hpp"
#include "liebreadth/catalog.hpp"
#include "liebreadth/generators.hpp"
#include "liebreadth/invariants.hpp"
#include "liebreadth/recognizer.hpp"
#include "oracles.hpp"

using namespace liebreadth;

namespace {
const Field Q = Field::rationals();
}

TEST(RandomInvertible, Contract) {
  const Matrix a = random_invertible(2, Q, 1, 5);
  EXPECT_FALSE(determinant(a).is_zero());
  EXPECT_EQ(a, random_invertible(2, Q, 1, 5));
  EXPECT_NE(a, random_invertible(2, Q, 1, 6));
  const Matrix g = random_invertible(1, Field::prime(3), 1, 0);
  EXPECT_FALSE(g(0, 0).is_zero());
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) EXPECT_LE(abs(a(r, c).rational_part()), 1);
  EXPECT_THROW(random_invertible(0, Q, 1, 0), Error);
}

TEST(RandomUnimodular, DeterminantIsUnit) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Matrix U = random_unimodular(4, 2, s);
    const Scalar d = determinant(U);
    EXPECT_TRUE(d == Scalar(Q, 1L) || d == Scalar(Q, -1L));
    const Matrix V = inverse(U);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(V(r, c).rational_part().get_den(), 1);
  }
}

TEST(RandomSolvable, AlwaysSolvableLieAlgebras) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const auto L = random_solvable(1 + s % 3, 1 + s % 4, Q, 3, s);
    ASSERT_TRUE(validate(L).ok());
    ASSERT_TRUE(is_solvable(L));
    ASSERT_TRUE(oracle::jacobi_holds(oracle::dense(L)));
  }
  EXPECT_EQ(random_solvable(2, 3, Q, 3, 4), random_solvable(2, 3, Q, 3, 4));
  EXPECT_TRUE(validate(random_solvable(2, 2, Field::prime(5), 3, 1)).ok());
  EXPECT_THROW(random_solvable(0, 2, Q, 3, 1), Error);
}

TEST(RandomSolvable, DiagonalActionGivesL8) {
  const auto r = classify(change_basis(semidirect({Matrix::from_ints(Q, {{1, 0}, {0, 2}})}), random_invertible(3, Q, 2, 3)));
  EXPECT_EQ(r.family, FamilyTag::l8(Scalar(Q, mpq_class(1, 2))));
}

TEST(RandomNilpotent, Contract) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto L = random_nilpotent(s);
    ASSERT_GE(L.dim(), 1u);
    ASSERT_TRUE(validate(L).ok());
    ASSERT_TRUE(is_nilpotent(L));
  }
  const auto H = build(FamilyTag::heisenberg(1, 1), Q);
  EXPECT_EQ(breadth(change_basis(H, random_invertible(3, Q, 3, 1))).value, 1u);
  EXPECT_EQ(breadth(change_basis(direct_sum(H, H), random_invertible(6, Q, 3, 1))).value, 2u);
  EXPECT_EQ(breadth(StructureTensor(Q, 3)).value, 0u);
}

TEST(AbelianSummand, Contract) {
  const auto L7 = build(FamilyTag::simple(Family::L7), Q);
  const auto P = add_abelian_summand(L7, 1);
  EXPECT_FALSE(is_pure(P));
  EXPECT_EQ(breadth(P).value, 2u);
  EXPECT_EQ(add_abelian_summand(StructureTensor(Q, 0), 3), StructureTensor(Q, 3));
  EXPECT_THROW(add_abelian_summand(L7, 0), Error);
}

TEST(Enumerate, DimensionTwo) {
  std::size_t visited = 0;
  const auto st = enumerate_gfp(3, 2, [&](const StructureTensor&, std::size_t) { ++visited; });
  EXPECT_EQ(st.total, 9u);
  EXPECT_EQ(st.jacobi_ok, 9u);
  EXPECT_EQ(visited, 9u);
  EXPECT_EQ(st.breadth_histogram.at(0), 1u);
  EXPECT_EQ(st.breadth_histogram.at(1), 8u);
}

TEST(Enumerate, DimensionThreeMatchesOracleAndShards) {
  std::mutex mu;
  std::size_t bad = 0, visited = 0;
  const auto one = enumerate_gfp(3, 3, [&](const StructureTensor& L, std::size_t b) {
    std::lock_guard lock(mu);
    ++visited;
    if (!oracle::jacobi_holds(oracle::dense(L), 3) || b != oracle::breadth_gfp(oracle::dense(L), 3)) ++bad;
  });
  EXPECT_EQ(one.total, 19683u);
  EXPECT_EQ(visited, one.jacobi_ok);
  EXPECT_EQ(bad, 0u);
  const auto four = enumerate_gfp(3, 3, [](const StructureTensor&, std::size_t) {}, 4);
  EXPECT_EQ(four.jacobi_ok, one.jacobi_ok);
  EXPECT_EQ(four.breadth_histogram, one.breadth_histogram);
}

TEST(Enumerate, JacobiCountAgainstBruteForce) {
  // Independent count of Jacobi-passing tensors in GF(3)^9.
  std::size_t count = 0;
  std::vector<std::int64_t> c(9, 0);
  while (true) {
    oracle::Dense d{3, std::vector<mpq_class>(27)};
    const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int p = 0; p < 3; ++p)
      for (int k = 0; k < 3; ++k) {
        d.at(pairs[p][0], pairs[p][1], k) = c[p * 3 + k];
        d.at(pairs[p][1], pairs[p][0], k) = -c[p * 3 + k];
      }
    count += oracle::jacobi_holds(d, 3);
    std::size_t i = 0;
    while (i < 9 && ++c[i] == 3) c[i++] = 0;
    if (i == 9) break;
  }
  EXPECT_EQ(enumerate_gfp(3, 3, [](const StructureTensor&, std::size_t) {}).jacobi_ok, count);
}

TEST(Enumerate, Budget) {
  EXPECT_THROW(enumerate_gfp(3, 4, [](const StructureTensor&, std::size_t) {}), Error);
  EXPECT_THROW(enumerate_gfp(5, 3, [](const StructureTensor&, std::size_t) {}, 1, 1000), Error);
}
