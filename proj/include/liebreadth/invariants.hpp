#pragma once

#include <vector>

#include "liebreadth/algebra.hpp"

namespace liebreadth {

/// L = L^(0), L^(1) = [L, L], ... listed until the first repeat; the last
/// entry is the terminal term.
std::vector<Subspace> derived_series(const StructureTensor& L);
/// L = L^0, L^1 = [L, L], L^k = [L, L^(k-1)], ... listed until the first repeat.
std::vector<Subspace> lower_central_series(const StructureTensor& L);

Subspace derived_algebra(const StructureTensor& L);
Subspace center(const StructureTensor& L);
/// {x : [x, s] = 0 for every s in S}.
Subspace centralizer(const StructureTensor& L, const Subspace& S);

bool is_abelian(const StructureTensor& L);
bool is_solvable(const StructureTensor& L);
bool is_nilpotent(const StructureTensor& L);
/// Z(L) contained in [L, L].
bool is_pure(const StructureTensor& L);
bool is_abelian_subspace(const StructureTensor& L, const Subspace& S);

/// K(x, y) = tr(ad_x ad_y) on basis pairs.
Matrix killing_form(const StructureTensor& L);
/// Cartan's criterion; throws UnsupportedField over GF(p).
bool is_semisimple(const StructureTensor& L);

struct CommonEigenvector {
  Field field;                 // input field or one quadratic extension
  Vector vector;               // nonzero, first nonzero coordinate 1
  std::vector<Scalar> weights; // one per input map
};

/// Common eigenvector of square maps spanning a solvable matrix Lie algebra
/// (Lie's theorem). Works down the derived series of the generated algebra:
/// a weight space of its last nonzero derived term is invariant, so the
/// search restricts to it and repeats. Among the eigenspaces available at
/// each step the one whose echelon basis has the smallest leading pivot wins,
/// and the returned vector is that eigenspace's first echelon row.
CommonEigenvector common_eigenvector(const std::vector<Matrix>& maps);

/// A self-centralizing abelian ideal: starts from the last nonzero derived
/// term and adjoins common eigenvectors of the induced action on C_L(A)/A
/// until C_L(A) = A. The result may live over a quadratic extension of the
/// input field. Requires char 0 and L solvable; returns L when L is abelian.
Subspace maximal_abelian_ideal(const StructureTensor& L);

}  // namespace liebreadth
