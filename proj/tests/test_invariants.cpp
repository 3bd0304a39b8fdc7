#include <gtest/gtest.h>

#include "liebreadth/catalog.hpp"
#include "liebreadth/generators.hpp"
#include "liebreadth/invariants.hpp"
#include "oracles.hpp"

using namespace liebreadth;

namespace {

const Field Q = Field::rationals();

Vector e(std::size_t n, std::size_t i) { return unit_vector(Q, n, i); }
Subspace span(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> vs;
  for (auto i : idx) vs.push_back(e(n, i));
  return Subspace::span(Q, n, vs);
}
std::vector<std::size_t> dims(const std::vector<Subspace>& s) {
  std::vector<std::size_t> out;
  for (const auto& x : s) out.push_back(x.dim());
  return out;
}

StructureTensor sl2() {
  StructureTensor L(Q, 3);
  L.set_bracket_ints(0, 1, {0, 2, 0});
  L.set_bracket_ints(0, 2, {0, 0, -2});
  L.set_bracket_ints(1, 2, {1, 0, 0});
  return L;
}

const StructureTensor L1 = build(FamilyTag::simple(Family::L1), Q);
const StructureTensor L8 = build(FamilyTag::l8(Scalar(Q, 3L)), Q);

}  // namespace

TEST(Series, DerivedExamples) {
  const auto d8 = derived_series(L8);
  ASSERT_EQ(d8.size(), 3u);
  EXPECT_EQ(d8[1], span(3, {1, 2}));
  EXPECT_TRUE(d8[2].is_zero());
  EXPECT_EQ(dims(derived_series(StructureTensor(Q, 4))), (std::vector<std::size_t>{4, 0}));
  const auto d1 = derived_series(L1);
  ASSERT_EQ(d1.size(), 4u);
  EXPECT_EQ(d1[1], span(4, {1, 2, 3}));
  EXPECT_EQ(d1[2], span(4, {3}));
}

TEST(Series, LowerCentralExamples) {
  EXPECT_EQ(lower_central_series(L8).back(), span(3, {1, 2}));
  EXPECT_EQ(lower_central_series(build(FamilyTag::l3(1), Q)).back().dim(), 1u);
  EXPECT_EQ(dims(lower_central_series(build(FamilyTag::heisenberg(1, 1), Q))), (std::vector<std::size_t>{3, 1, 0}));
}

TEST(Series, ConjugationInvariantProfiles) {
  const auto samples = catalog_samples();
  for (int t = 0; t < 100; ++t) {
    const auto L = build(samples[static_cast<std::size_t>(t) % samples.size()], Q);
    const auto M = change_basis(L, random_invertible(L.dim(), Q, 4, 900 + t));
    ASSERT_EQ(dims(derived_series(M)), dims(derived_series(L)));
    ASSERT_EQ(dims(lower_central_series(M)), dims(lower_central_series(L)));
    ASSERT_EQ(derived_series(M)[1], lower_central_series(M)[1]);
  }
}

TEST(Series, DimensionsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto L = random_solvable(1 + seed % 3, 2 + seed % 3, Q, 3, seed);
    const auto d = oracle::dense(L);
    const auto full = oracle::standard(L.dim());
    EXPECT_EQ(derived_algebra(L).dim(), oracle::bracket_dim(d, full, full));
    EXPECT_EQ(center(L).dim(), oracle::center_dim(d));
  }
}

TEST(Center, Examples) {
  EXPECT_EQ(center(L1), span(4, {3}));
  EXPECT_TRUE(center(L8).is_zero());
  const auto L5 = build(FamilyTag::simple(Family::L5), Q);
  EXPECT_EQ(centralizer(L5, derived_algebra(L5)), span(4, {1, 3}));
  EXPECT_EQ(centralizer(L5, derived_algebra(L5)), derived_algebra(L5));
  EXPECT_EQ(centralizer(L1, Subspace::zero(Q, 4)), Subspace::full(Q, 4));
}

TEST(Predicates, SolvableNilpotentPure) {
  EXPECT_TRUE(is_solvable(L1));
  EXPECT_FALSE(is_nilpotent(L1));
  const auto H = build(FamilyTag::heisenberg(2, 1), Q);
  EXPECT_TRUE(is_solvable(H));
  EXPECT_TRUE(is_nilpotent(H));
  EXPECT_FALSE(is_solvable(sl2()));
  EXPECT_TRUE(is_pure(L1));
  EXPECT_FALSE(is_pure(direct_sum(build(FamilyTag::simple(Family::L7), Q), StructureTensor(Q, 1))));
  EXPECT_TRUE(is_pure(StructureTensor(Q, 0)));
}

TEST(Predicates, PaddingBreaksPurity) {
  for (const auto& tag : catalog_samples())
    for (std::size_t m = 1; m <= 2; ++m) EXPECT_FALSE(is_pure(add_abelian_summand(build(tag, Q), m))) << tag.to_string();
}

TEST(Killing, Examples) {
  EXPECT_TRUE(killing_form(StructureTensor(Q, 3)).is_zero());
  EXPECT_FALSE(is_semisimple(StructureTensor(Q, 3)));
  const Matrix K = killing_form(sl2());
  EXPECT_EQ(K, K.transpose());
  EXPECT_EQ(determinant(K), Scalar(Q, -128L));
  EXPECT_TRUE(is_semisimple(sl2()));
  EXPECT_FALSE(is_semisimple(L8));
  EXPECT_THROW(is_semisimple(StructureTensor(Field::prime(5), 3)), Error);
}

TEST(CommonEigenvector, Examples) {
  const auto a = common_eigenvector({Matrix::from_ints(Q, {{1, 0}, {0, 3}})});
  EXPECT_EQ(a.vector, e(2, 0));
  EXPECT_EQ(a.weights, (std::vector<Scalar>{Scalar(Q, 1L)}));
  const auto b = common_eigenvector({Matrix::from_ints(Q, {{1, 1}, {0, 1}})});
  EXPECT_EQ(b.vector, e(2, 0));
  const auto c = common_eigenvector({Matrix::from_ints(Q, {{1, 0}, {0, 0}}), Matrix::from_ints(Q, {{0, 0}, {0, 1}})});
  EXPECT_EQ(c.vector, e(2, 0));
  EXPECT_EQ(c.weights, (std::vector<Scalar>{Scalar(Q, 1L), Scalar(Q, 0L)}));
}

TEST(CommonEigenvector, QuadraticWeights) {
  const auto r = common_eigenvector({Matrix::from_ints(Q, {{0, 2}, {1, 0}})});
  EXPECT_EQ(r.field, Field::quadratic(2));
  const Matrix m = lift(Matrix::from_ints(Q, {{0, 2}, {1, 0}}), r.field);
  EXPECT_EQ(m.apply(r.vector), scale(r.weights[0], r.vector));
  EXPECT_EQ(r.weights[0] * r.weights[0], Scalar(r.field, 2L));
}

TEST(CommonEigenvector, RejectsNonsolvableAction) {
  const auto L = sl2();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < 3; ++i) ads.push_back(ad_matrix(L, e(3, i)));
  EXPECT_THROW(common_eigenvector(ads), Error);
}

TEST(MaximalAbelianIdeal, Examples) {
  EXPECT_EQ(maximal_abelian_ideal(L8), span(3, {1, 2}));
  const auto H = build(FamilyTag::heisenberg(1, 1), Q);
  const auto A = maximal_abelian_ideal(H);
  EXPECT_EQ(A.dim(), 2u);
  EXPECT_TRUE(A.contains(center(H)));
  const auto B = maximal_abelian_ideal(L1);
  EXPECT_EQ(centralizer(L1, B), B);
  EXPECT_THROW(maximal_abelian_ideal(sl2()), Error);
  EXPECT_THROW(maximal_abelian_ideal(build(FamilyTag::simple(Family::L7), Field::prime(3))), Error);
}

TEST(MaximalAbelianIdeal, CertificateOnRandomSolvable) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t m = 1 + seed % 3, k = 2 + seed % 3;
    const auto L = random_solvable(m, k, Q, 3, seed);
    if (is_abelian(L)) continue;
    const auto A = maximal_abelian_ideal(L);
    const auto Lf = lift(L, A.field());
    ASSERT_TRUE(is_abelian_subspace(Lf, A));
    ASSERT_TRUE(A.contains(bracket_space(Lf, Subspace::full(A.field(), L.dim()), A)));
    ASSERT_EQ(centralizer(Lf, A), A);
  }
}

TEST(InvariantsBaseCases, SolvableWhenBreadthAtMostOne) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto L = random_nilpotent(seed);
    EXPECT_TRUE(is_nilpotent(L));
    EXPECT_TRUE(is_solvable(L));
  }
}
