#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <utility>

#include "liebreadth/error.hpp"

namespace liebreadth {

enum class FieldKind { Rationals, PrimeField, QuadExt };

namespace detail {
struct FieldData;
}

/// Handle to an interned field descriptor: Q, GF(p) with p an odd prime, or
/// Q(sqrt d) with d a squarefree integer other than 0 and 1. Two handles
/// compare equal exactly when they describe the same field.
class Field {
 public:
  Field();  // the rationals

  static Field rationals();
  static Field prime(std::int64_t p);
  /// Accepts any nonzero nonsquare rational d; the descriptor stores the
  /// squarefree integer d0 with Q(sqrt d) = Q(sqrt d0).
  static Field quadratic(const mpq_class& d);

  FieldKind kind() const;
  bool is_rationals() const { return kind() == FieldKind::Rationals; }
  bool is_prime() const { return kind() == FieldKind::PrimeField; }
  bool is_quadratic() const { return kind() == FieldKind::QuadExt; }
  bool char_zero() const { return kind() != FieldKind::PrimeField; }

  std::int64_t modulus() const;     // PrimeField only
  const mpz_class& radicand() const;  // QuadExt only

  std::string to_string() const;

  friend bool operator==(Field a, Field b) { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_;
};

/// Exact element of a Field. Values are kept canonical (reduced fractions,
/// residues in [0, p)), so equality is structural.
class Scalar {
 public:
  Scalar() = default;  // 0 in Q
  Scalar(Field field, const mpq_class& value);
  Scalar(Field field, long value) : Scalar(field, mpq_class(value)) {}
  /// a + b sqrt(d) in a QuadExt field.
  Scalar(Field field, const mpq_class& a, const mpq_class& b);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value (Q), residue (GF(p)), or the rational part a (QuadExt).
  const mpq_class& rational_part() const { return a_; }
  /// The b in a + b sqrt(d); zero outside QuadExt.
  const mpq_class& irrational_part() const { return b_; }
  std::int64_t residue() const;
  bool is_rational() const { return field_.char_zero() && sgn(b_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inv() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used only for deterministic tie-breaking: numeric on the
  /// rational part, then on the irrational part; residues compare as integers.
  friend std::strong_ordering canonical_order(const Scalar& a, const Scalar& b);

  /// "p/q" or "n" for Q and GF(p); "a+b*sqrt(d)" for QuadExt.
  std::string to_string() const;

 private:
  void require_same(const Scalar& o) const;
  void normalize();

  Field field_;
  mpq_class a_;
  mpq_class b_;
};

Scalar embed(const Scalar& s, Field target);
bool same_value(const Scalar& a, const Scalar& b);

/// Square root of a nonzero rational c: (r, F) with r * r == c. F is Q when c
/// is a rational square and Q(sqrt d) otherwise, d the squarefree part of c.
std::pair<Scalar, Field> sqrt_or_extend(const Scalar& c);

/// Square root inside the scalar's own field, if one exists. Works for Q,
/// QuadExt and GF(p).
bool try_sqrt_in_field(const Scalar& c, Scalar& root);

/// Squarefree integer part of a nonzero rational together with the rational
/// s such that value = d * s^2.
std::pair<mpz_class, mpq_class> squarefree_decomposition(const mpq_class& value);

bool is_prime(std::int64_t n);

}  // namespace liebreadth
