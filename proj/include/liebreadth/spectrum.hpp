#pragma once

#include <vector>

#include "liebreadth/algebra.hpp"

namespace liebreadth {

/// Univariate polynomial, coefficients from degree 0 upward.
using Polynomial = std::vector<Scalar>;

Scalar evaluate(const Polynomial& p, const Scalar& x);
std::size_t degree(const Polynomial& p);

/// det(t I - M), monic. Characteristic zero only (Faddeev-LeVerrier).
Polynomial characteristic_polynomial(const Matrix& m);

/// Minimal polynomial of m restricted to the cyclic subspace generated by v.
Polynomial krylov_polynomial(const Matrix& m, const Vector& v);

/// Distinct roots lying in the polynomial's own field, in canonical order.
/// Over Q every rational root is found; over Q(sqrt d) roots are found for
/// degree <= 2 and for polynomials whose coefficients are rational.
std::vector<Scalar> roots_in_field(const Polynomial& p);

struct EigenvalueSearch {
  Field field;                // m.field() or a single quadratic extension of it
  std::vector<Scalar> values; // distinct, canonical order, all in `field`
};

/// Eigenvalues of m available without leaving its field; if there are none,
/// the roots of one quadratic factor of the characteristic polynomial in
/// Q(sqrt d). Throws FieldExtensionNeeded when neither works.
EigenvalueSearch find_eigenvalues(const Matrix& m);

}  // namespace liebreadth
