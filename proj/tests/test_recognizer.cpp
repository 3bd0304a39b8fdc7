#include <gtest/gtest.h>

#include "liebreadth/catalog.hpp"
#include "liebreadth/generators.hpp"
#include "liebreadth/recognizer.hpp"

using namespace liebreadth;

namespace {

const Field Q = Field::rationals();
Scalar q(long a, long b = 1) { return Scalar(Q, mpq_class(a, b)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

// Independent witness check: P^-1 [P e_i, P e_j] against the model table.
bool witness_maps_onto_model(const StructureTensor& input, const ClassificationReport& r) {
  const auto L = lift(input, r.field_used);
  const auto model = build(r.family, r.field_used);
  const Matrix Pinv = inverse(r.witness);
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Vector lhs = Pinv.apply(bracket(L, r.witness.column(i), r.witness.column(j)));
      if (!(lhs == model.bracket_basis(i, j))) return false;
    }
  return true;
}

FamilyTag normalized(FamilyTag tag) {
  if (tag.gamma) tag.gamma = normalize_gamma(*tag.gamma);
  return tag;
}

}  // namespace

TEST(Classify, RoundTripsCatalogConjugates) {
  for (const auto& tag : catalog_samples()) {
    if (tag.family == Family::L4) continue;
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto model = build(tag, Q);
      const auto L = change_basis(model, random_invertible(model.dim(), Q, 5, 1000 * s + model.dim()));
      const auto r = classify(L);
      ASSERT_EQ(r.family, normalized(tag))
          << tag.to_string();
      ASSERT_TRUE(r.verified) << tag.to_string();
      ASSERT_TRUE(witness_maps_onto_model(L, r)) << tag.to_string();
    }
  }
}

TEST(Classify, IdentityOnModels) {
  const auto r = classify(build(FamilyTag::l3(1), Q));
  EXPECT_EQ(r.family, FamilyTag::l3(1));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(rank(r.witness), 4u);
}

TEST(Classify, SemidirectExamples) {
  const auto a = classify(semidirect({Matrix::from_ints(Q, {{1, 0}, {0, 2}})}));
  EXPECT_EQ(a.family, FamilyTag::l8(q(1, 2)));
  ASSERT_TRUE(a.parameter_orbit);
  EXPECT_EQ(a.parameter_orbit->first, q(1, 2));
  EXPECT_EQ(a.parameter_orbit->second, q(2));
  EXPECT_EQ(classify(semidirect({Matrix::from_ints(Q, {{1, 1}, {0, 1}})})).family, FamilyTag::simple(Family::L7));
  EXPECT_EQ(classify(semidirect({Matrix::from_ints(Q, {{2, 0}, {0, 2}})})).family, FamilyTag::l8(q(1)));
  const auto b = classify(semidirect({Matrix::from_ints(Q, {{1, 0}, {0, 0}}), Matrix::from_ints(Q, {{0, 0}, {0, 1}})}));
  EXPECT_EQ(b.family, FamilyTag::simple(Family::L5));
}

TEST(Classify, QuadraticExtensionWhenNeeded) {
  const auto r = classify(semidirect({Matrix::from_ints(Q, {{0, 1}, {2, 0}})}));
  EXPECT_EQ(r.field_used, Field::quadratic(2));
  EXPECT_EQ(r.family, FamilyTag::l8(q(-1)));
  EXPECT_TRUE(r.verified);

  // A second, independent square root is refused.
  const Field F = Field::quadratic(2);
  const auto over_f = lift(semidirect({Matrix::from_ints(Q, {{0, 1}, {3, 0}})}), F);
  EXPECT_EQ(kind_of([&] { classify(over_f); }), ErrorKind::FieldExtensionNeeded);
}

TEST(Classify, L1NeedingSqrt) {
  // w acts on span{x, y} by [[1, 1], [1, -1]]: eigenvalues +-sqrt 2.
  StructureTensor L(Q, 4);
  L.set_bracket_ints(0, 1, {0, 1, 1, 0});
  L.set_bracket_ints(0, 2, {0, 1, -1, 0});
  L.set_bracket_ints(1, 2, {0, 0, 0, 1});
  ASSERT_TRUE(validate(L).ok());
  const auto r = classify(L);
  EXPECT_EQ(r.family, FamilyTag::simple(Family::L1));
  EXPECT_EQ(r.field_used, Field::quadratic(2));
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(witness_maps_onto_model(L, r));
}

TEST(Classify, Preconditions) {
  auto rejects = [&](const StructureTensor& L) { return kind_of([&] { classify(L); }); };
  EXPECT_EQ(rejects(build(FamilyTag::simple(Family::L7), Field::prime(5))), ErrorKind::PreconditionFailed);
  StructureTensor sl2(Q, 3);
  sl2.set_bracket_ints(0, 1, {0, 2, 0});
  sl2.set_bracket_ints(0, 2, {0, 0, -2});
  sl2.set_bracket_ints(1, 2, {1, 0, 0});
  EXPECT_EQ(rejects(sl2), ErrorKind::PreconditionFailed);
  EXPECT_EQ(rejects(add_abelian_summand(build(FamilyTag::simple(Family::L7), Q), 1)), ErrorKind::PreconditionFailed);
  const auto H = build(FamilyTag::heisenberg(1, 1), Q);
  EXPECT_EQ(rejects(direct_sum(H, H)), ErrorKind::PreconditionFailed);
  EXPECT_EQ(rejects(direct_sum(build(FamilyTag::simple(Family::L1), Q), build(FamilyTag::breadth1_solvable(2), Q))),
            ErrorKind::PreconditionFailed);
  EXPECT_EQ(rejects(build(FamilyTag::simple(Family::L4), Q)), ErrorKind::PreconditionFailed);
}

TEST(Classify, AbelianAndBreadthOne) {
  EXPECT_EQ(classify(StructureTensor(Q, 0)).family, FamilyTag::abelian(0));
  const auto H = change_basis(build(FamilyTag::heisenberg(2, 1), Q), random_invertible(5, Q, 3, 4));
  EXPECT_EQ(classify(H).family, FamilyTag::heisenberg(2, 1));
  const auto B = change_basis(build(FamilyTag::breadth1_solvable(2), Q), random_invertible(2, Q, 3, 4));
  EXPECT_EQ(classify(B).family, FamilyTag::breadth1_solvable(2));
}

TEST(Canonicalizers, NormalFormsOnNonpureInputs) {
  const auto H = change_basis(build(FamilyTag::heisenberg(1, 3), Q), random_invertible(5, Q, 2, 8));
  const auto c = canonicalize_alternating(H);
  EXPECT_EQ(c.tag, FamilyTag::heisenberg(1, 3));
  EXPECT_EQ(change_basis(H, c.witness), build(c.tag, Q));

  const auto B = change_basis(build(FamilyTag::breadth1_solvable(5), Q), random_invertible(5, Q, 2, 9));
  const auto d = canonicalize_b1_solvable(B);
  EXPECT_EQ(d.tag, FamilyTag::breadth1_solvable(5));
  EXPECT_EQ(change_basis(B, d.witness), build(d.tag, Q));

  EXPECT_EQ(kind_of([] { canonicalize_S2(build(FamilyTag::simple(Family::L7), Q)); }), ErrorKind::PreconditionFailed);
  EXPECT_EQ(kind_of([] { canonicalize_depth1(build(FamilyTag::simple(Family::L7), Q)); }), ErrorKind::PreconditionFailed);
  EXPECT_EQ(kind_of([] { canonicalize_depth2(build(FamilyTag::l2(2), Q)); }), ErrorKind::PreconditionFailed);
  EXPECT_EQ(kind_of([] { canonicalize_alternating(build(FamilyTag::breadth1_solvable(2), Q)); }),
            ErrorKind::PreconditionFailed);
}

TEST(Canonicalizers, LargerDepthOneCases) {
  for (const auto& tag : {FamilyTag::l2(6), FamilyTag::l3(5)}) {
    const auto model = build(tag, Q);
    const auto L = change_basis(model, random_invertible(model.dim(), Q, 3, 31));
    const auto c = canonicalize_depth1(L);
    EXPECT_EQ(c.tag, tag);
    EXPECT_EQ(change_basis(L, c.witness), model);
  }
}

TEST(Gamma, Normalization) {
  EXPECT_EQ(normalize_gamma(q(2)), q(1, 2));
  EXPECT_EQ(normalize_gamma(q(1, 2)), q(1, 2));
  EXPECT_EQ(normalize_gamma(q(3)), q(1, 3));
  EXPECT_EQ(normalize_gamma(q(-2)), q(-2));
  EXPECT_EQ(normalize_gamma(q(-1, 2)), q(-2));
  EXPECT_EQ(normalize_gamma(q(-1)), q(-1));
  EXPECT_EQ(normalize_gamma(q(2, 3)), q(2, 3));
  EXPECT_EQ(normalize_gamma(q(3, 2)), q(2, 3));
  const Field F = Field::prime(7);
  EXPECT_EQ(normalize_gamma(Scalar(F, 3L)), Scalar(F, 3L));  // 3^-1 = 5
  EXPECT_EQ(normalize_gamma(Scalar(F, 5L)), Scalar(F, 3L));
  EXPECT_THROW(normalize_gamma(q(0)), Error);
}

TEST(Gamma, OrbitInvariance) {
  for (long a : {2L, -3L, 5L})
    for (long b : {1L, 3L, 7L}) {
      const auto r1 = classify(build(FamilyTag::l8(q(a, b)), Q));
      const auto r2 = classify(build(FamilyTag::l8(q(b, a)), Q));
      ASSERT_TRUE(r1.parameter_orbit && r2.parameter_orbit);
      EXPECT_EQ(r1.parameter_orbit->first, r2.parameter_orbit->first);
      EXPECT_EQ(r1.parameter_orbit->second, r2.parameter_orbit->second);
      EXPECT_EQ(r1.parameter_orbit->first * r1.parameter_orbit->second, q(1));
    }
}

TEST(Isomorphism, L8Law) {
  const auto a = are_isomorphic(build(FamilyTag::l8(q(2)), Q), build(FamilyTag::l8(q(1, 2)), Q));
  EXPECT_TRUE(a.isomorphic);
  ASSERT_TRUE(a.witness);
  EXPECT_TRUE(verify_isomorphism(build(FamilyTag::l8(q(2)), Q), build(FamilyTag::l8(q(1, 2)), Q), *a.witness));
  EXPECT_FALSE(are_isomorphic(build(FamilyTag::l8(q(2)), Q), build(FamilyTag::l8(q(-2)), Q)).isomorphic);
  EXPECT_FALSE(are_isomorphic(build(FamilyTag::simple(Family::L7), Q), build(FamilyTag::l8(q(1)), Q)).isomorphic);
}

TEST(Isomorphism, ExplicitMap) {
  const Scalar g = q(3, 5);
  Matrix P(Q, 3, 3);
  P(0, 0) = g;
  P(2, 1) = q(1);
  P(1, 2) = q(1);
  EXPECT_TRUE(verify_isomorphism(build(FamilyTag::l8(g), Q), build(FamilyTag::l8(g.inv()), Q), P));
  EXPECT_TRUE(verify_isomorphism(build(FamilyTag::l8(g), Q), build(FamilyTag::l8(g), Q), Matrix::identity(Q, 3)));
  EXPECT_FALSE(verify_isomorphism(build(FamilyTag::l8(g), Q), build(FamilyTag::l8(g), Q), Matrix(Q, 3, 3)));
  EXPECT_THROW(verify_isomorphism(build(FamilyTag::l8(g), Q), build(FamilyTag::l8(g), Q), Matrix::identity(Q, 2)), Error);
}

TEST(Isomorphism, L7NeverMatchesL8One) {
  const auto L7 = build(FamilyTag::simple(Family::L7), Q), L8 = build(FamilyTag::l8(q(1)), Q);
  for (std::uint64_t s = 0; s < 100; ++s) EXPECT_FALSE(verify_isomorphism(L7, L8, random_invertible(3, Q, 4, s)));
}

TEST(Isomorphism, ConjugatesWithWitness) {
  for (const auto& tag : catalog_samples()) {
    if (tag.family == Family::L4) continue;
    const auto L = build(tag, Q);
    const auto M = change_basis(L, random_invertible(L.dim(), Q, 3, 55));
    const auto r = are_isomorphic(L, M);
    EXPECT_TRUE(r.isomorphic) << tag.to_string();
    ASSERT_TRUE(r.witness) << tag.to_string();
    EXPECT_TRUE(verify_isomorphism(L, M, *r.witness)) << tag.to_string();
  }
}
