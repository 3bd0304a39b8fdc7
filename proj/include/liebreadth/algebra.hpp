#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "liebreadth/matrix.hpp"

namespace liebreadth {

using Vector = std::vector<Scalar>;
using LinearMap = Matrix;

/// Subspace of F^n held as the rows of its reduced row-echelon basis, so two
/// subspaces are equal exactly when their echelon matrices are.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);

  Field field() const { return echelon_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return echelon_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& echelon() const { return echelon_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis() const;
  Vector basis_vector(std::size_t i) const { return echelon_.row(i); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Standard basis indices at the non-pivot columns: a complement.
  std::vector<std::size_t> complement_indices() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.echelon_ == b.echelon_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix echelon_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {x : <x, s> = 0 for all s in S} under the coordinate pairing.
Subspace annihilator(const Subspace& s);
Subspace lift(const Subspace& s, Field target);

/// Lie algebra by structure constants c_{ij}^k. Only pairs i < j are stored;
/// [e_j, e_i] is read back as -[e_i, e_j] and [e_i, e_i] as 0. Indices are
/// 0-based here and 1-based in the JSON format.
class StructureTensor {
 public:
  StructureTensor() = default;
  StructureTensor(Field field, std::size_t n);

  static StructureTensor abelian(Field field, std::size_t n) { return StructureTensor(field, n); }

  Field field() const { return field_; }
  std::size_t dim() const { return n_; }

  /// [e_i, e_j] for any i, j.
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  const Vector& stored_pair(std::size_t i, std::size_t j) const;  // requires i < j

  /// Sets [e_i, e_j] = value (and so [e_j, e_i] = -value). Requires i != j.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  /// Sets [e_i, e_j] = sum_k coeffs[k] e_k from integer coefficients.
  void set_bracket_ints(std::size_t i, std::size_t j, const std::vector<long>& coeffs);

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.pairs_ == b.pairs_;
  }

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  Field field_;
  std::size_t n_ = 0;
  std::vector<Vector> pairs_;
};

struct JacobiViolation {
  std::size_t i, j, k;  // 0-based, i < j < k
  Vector value;
};

struct ValidationReport {
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

Vector bracket(const StructureTensor& L, const Vector& u, const Vector& v);
ValidationReport validate(const StructureTensor& L);

/// Column j is [x, e_j].
LinearMap ad_matrix(const StructureTensor& L, const Vector& x);
/// Column j is [x, a_j] for the echelon basis a_j of A; codomain is ambient.
LinearMap ad_restricted(const StructureTensor& L, const Vector& x, const Subspace& A);

/// Structure constants in the basis given by the columns of P:
/// [u, v]' = P^-1 [P u, P v].
StructureTensor change_basis(const StructureTensor& L, const LinearMap& P);
StructureTensor direct_sum(const StructureTensor& a, const StructureTensor& b);
/// A (x) V with A abelian of dimension m acting on abelian V through the
/// given pairwise commuting k x k matrices. Basis order: a_1..a_m, v_1..v_k.
StructureTensor semidirect(const std::vector<Matrix>& actions);

struct Quotient {
  StructureTensor algebra;
  LinearMap projection;  // (n - dim I) x n
};
/// Quotient by an ideal; coset representatives are the standard basis vectors
/// at the non-pivot columns of the ideal's echelon form.
Quotient quotient(const StructureTensor& L, const Subspace& ideal);

Subspace bracket_space(const StructureTensor& L, const Subspace& S, const Subspace& T);
bool is_ideal(const StructureTensor& L, const Subspace& S);

StructureTensor reduce_mod_p(const StructureTensor& L, std::int64_t p);
StructureTensor lift(const StructureTensor& L, Field target);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
Vector lift(const Vector& v, Field target);

}  // namespace liebreadth
