#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liebreadth/algebra.hpp"

namespace liebreadth {

enum class Family { Abelian, HeisenbergCentral, Breadth1Solvable, L1, L2, L3, L4, L5, L6, L7, L8 };

/// A named algebra. `n` parametrises Abelian, Breadth1Solvable, L2 and L3;
/// (k, m) parametrise HeisenbergCentral; gamma parametrises L8.
struct FamilyTag {
  Family family = Family::Abelian;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::optional<Scalar> gamma;

  static FamilyTag abelian(std::size_t n) { return {Family::Abelian, n, 0, 0, {}}; }
  static FamilyTag heisenberg(std::size_t k, std::size_t m) { return {Family::HeisenbergCentral, 0, k, m, {}}; }
  static FamilyTag breadth1_solvable(std::size_t n) { return {Family::Breadth1Solvable, n, 0, 0, {}}; }
  static FamilyTag simple(Family f) { return {f, 0, 0, 0, {}}; }
  static FamilyTag l2(std::size_t n) { return {Family::L2, n, 0, 0, {}}; }
  static FamilyTag l3(std::size_t n) { return {Family::L3, n, 0, 0, {}}; }
  static FamilyTag l8(const Scalar& gamma) { return {Family::L8, 0, 0, 0, gamma}; }

  /// "L1", "L2(4)", "L8(1/2)", "HeisenbergCentral(2,1)", ...
  std::string to_string() const;
  /// Tag equality; gamma values compare across fields (a rational embedded
  /// in Q(sqrt d) equals itself in Q).
  friend bool operator==(const FamilyTag& a, const FamilyTag& b);
};

std::string family_name(Family f);

/// Parses to_string() output. A bare "L8" takes gamma from the second
/// argument. Gamma strings are rationals "p/q" or integers.
FamilyTag parse_tag(const std::string& text, const std::optional<std::string>& gamma = std::nullopt);

/// Bracket table of the tagged algebra in its fixed basis order.
/// Throws BadParameter for out-of-range parameters or a gamma that is zero
/// or not representable in `field`.
StructureTensor build(const FamilyTag& tag, Field field = Field::rationals());

struct ExpectedInvariants {
  std::size_t dim;
  std::size_t dim_derived;
  std::size_t dim_center;
  std::size_t breadth;
  bool solvable;
  bool nilpotent;
  bool pure;
  std::size_t lcs_stable_dim;  // dimension of the terminal lower-central term

  friend bool operator==(const ExpectedInvariants&, const ExpectedInvariants&) = default;
};

ExpectedInvariants expected_invariants(const FamilyTag& tag);

/// Representative tags for listing and round-trip checks.
std::vector<FamilyTag> catalog_samples();

}  // namespace liebreadth
