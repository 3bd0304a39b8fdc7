#pragma once

#include <optional>
#include <utility>

#include "liebreadth/catalog.hpp"

namespace liebreadth {

/// A basis change onto a catalog model. Column i of `witness` is the i-th
/// model basis vector written in input coordinates, so
/// change_basis(lift(input, field), witness) == build(tag, field).
struct Canonical {
  FamilyTag tag;
  Matrix witness;
  Field field;
};

struct ClassificationReport {
  FamilyTag family;
  /// {gamma, 1/gamma} for L8, canonical representative first.
  std::optional<std::pair<Scalar, Scalar>> parameter_orbit;
  Matrix witness;
  bool verified = false;
  Field field_used;
};

/// Classifies a pure solvable Lie algebra of breadth at most 2 over Q or
/// Q(sqrt d). Throws PreconditionFailed when the input is not a Lie algebra,
/// not solvable, not pure, of breadth above 2, over GF(p), or nilpotent where
/// only nonnilpotent models exist; FieldExtensionNeeded when a second square
/// root would be required; InconsistentWithClassification when an
/// intermediate structural claim fails.
ClassificationReport classify(const StructureTensor& L);

/// [u, v] = phi(u, v) z with [L, L] = span{z}: symplectic Gram reduction onto
/// HeisenbergCentral(k, m).
Canonical canonicalize_alternating(const StructureTensor& L);
/// [L, L] = span{x} with [x, y] = x: onto Breadth1Solvable(n).
Canonical canonicalize_b1_solvable(const StructureTensor& L);
/// dim[L, L] = 3 and dim L/Z(L) = 3: onto L1, possibly over Q(sqrt d).
Canonical canonicalize_S2(const StructureTensor& L);
/// dim[L, L] = 2 with one-dimensional terminal lower central term: onto L2(n) or L3(n).
Canonical canonicalize_depth1(const StructureTensor& L);
/// dim[L, L] = 2 with two-dimensional terminal lower central term: onto L5,
/// L6, L7 or L8(gamma).
Canonical canonicalize_depth2(const StructureTensor& L);

/// Representative of {gamma, 1/gamma}. Rationals: the smaller of
/// (|num * den|, num); otherwise the smaller (a, b) pair.
Scalar normalize_gamma(const Scalar& gamma);

struct IsomorphismResult {
  bool isomorphic = false;
  /// P with P[u, v] = [Pu, Pv]'; absent when the two witnesses live in
  /// different quadratic extensions.
  std::optional<Matrix> witness;
};

IsomorphismResult are_isomorphic(const StructureTensor& L, const StructureTensor& Lp);

/// P invertible and P[e_i, e_j] = [P e_i, P e_j]' for all i < j. Inputs are
/// lifted to a common field first.
bool verify_isomorphism(const StructureTensor& L, const StructureTensor& Lp, const Matrix& P);

}  // namespace liebreadth
