#include "liebreadth/algebra.hpp"

#include <algorithm>

namespace liebreadth {

namespace {

void require_field(Field expected, const Vector& v) {
  for (const auto& s : v)
    if (!(s.field() == expected))
      throw Error(ErrorKind::FieldMismatch, "vector over " + s.field().to_string() + ", expected " +
                                                expected.to_string());
}

void require_len(std::size_t n, const Vector& v) {
  if (v.size() != n)
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
}

}  // namespace

Subspace Subspace::zero(Field field, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.echelon_ = Matrix(field, 0, ambient);
  return s;
}

Subspace Subspace::full(Field field, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.echelon_ = Matrix::identity(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
  Matrix m(field, vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    require_len(ambient, vectors[r]);
    require_field(field, vectors[r]);
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
  }
  Subspace s;
  s.ambient_ = ambient;
  s.pivots_ = rref_in_place(m);
  s.echelon_ = Matrix(field, s.pivots_.size(), ambient);
  for (std::size_t r = 0; r < s.pivots_.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c) s.echelon_(r, c) = m(r, c);
  return s;
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(echelon_.row(r));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  require_len(ambient_, v);
  // Reduce v against the echelon rows; membership iff the remainder is zero.
  Vector rem = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar f = rem[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!echelon_(r, c).is_zero()) rem[c] -= f * echelon_(r, c);
  }
  return is_zero_vector(rem);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different ambients");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "subspaces of different ambients");
  auto vs = a.basis();
  auto vb = b.basis();
  vs.insert(vs.end(), vb.begin(), vb.end());
  return Subspace::span(a.field(), a.ambient(), vs);
}

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.field(), s.ambient());
  return Subspace::span(s.field(), s.ambient(), kernel(s.echelon()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "subspaces of different ambients");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace lift(const Subspace& s, Field target) {
  if (s.field() == target) return s;
  return Subspace::span(target, s.ambient(), [&] {
    std::vector<Vector> vs;
    for (auto& v : s.basis()) vs.push_back(lift(v, target));
    return vs;
  }());
}

StructureTensor::StructureTensor(Field field, std::size_t n)
    : field_(field), n_(n), pairs_(n < 2 ? 0 : n * (n - 1) / 2, zero_vector(field, n)) {}

std::size_t StructureTensor::pair_index(std::size_t i, std::size_t j) const {
  // rows i = 0..n-2, each holding pairs (i, i+1..n-1)
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

const Vector& StructureTensor::stored_pair(std::size_t i, std::size_t j) const {
  if (!(i < j && j < n_)) throw Error(ErrorKind::DimensionMismatch, "stored_pair requires i < j < n");
  return pairs_[pair_index(i, j)];
}

Vector StructureTensor::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
  if (i == j) return zero_vector(field_, n_);
  if (i < j) return pairs_[pair_index(i, j)];
  return scale(-Scalar::one(field_), pairs_[pair_index(j, i)]);
}

void StructureTensor::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= n_ || j >= n_ || i == j) throw Error(ErrorKind::DimensionMismatch, "set_bracket index");
  require_len(n_, value);
  require_field(field_, value);
  if (i < j)
    pairs_[pair_index(i, j)] = value;
  else
    pairs_[pair_index(j, i)] = scale(-Scalar::one(field_), value);
}

void StructureTensor::set_bracket_ints(std::size_t i, std::size_t j, const std::vector<long>& coeffs) {
  Vector v;
  for (long c : coeffs) v.emplace_back(field_, c);
  set_bracket(i, j, v);
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sum");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector difference");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

Vector lift(const Vector& v, Field target) {
  Vector r;
  r.reserve(v.size());
  for (const auto& s : v) r.push_back(embed(s, target));
  return r;
}

Vector bracket(const StructureTensor& L, const Vector& u, const Vector& v) {
  const std::size_t n = L.dim();
  require_len(n, u);
  require_len(n, v);
  require_field(L.field(), u);
  require_field(L.field(), v);
  Vector out = zero_vector(L.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar w = u[i] * v[j] - u[j] * v[i];
      if (w.is_zero()) continue;
      const Vector& c = L.stored_pair(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) out[k] += w * c[k];
    }
  return out;
}

ValidationReport validate(const StructureTensor& L) {
  ValidationReport report;
  const std::size_t n = L.dim();
  const Field f = L.field();
  // [[e_i,e_j],e_k] = sum_l c_ij^l [e_l, e_k]
  auto outer = [&](const Vector& inner, std::size_t k) {
    Vector r = zero_vector(f, n);
    for (std::size_t l = 0; l < n; ++l) {
      if (inner[l].is_zero() || l == k) continue;
      const Vector b = L.bracket_basis(l, k);
      for (std::size_t m = 0; m < n; ++m)
        if (!b[m].is_zero()) r[m] += inner[l] * b[m];
    }
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector total = outer(L.bracket_basis(i, j), k);
        total = add(total, outer(L.bracket_basis(j, k), i));
        total = add(total, outer(L.bracket_basis(k, i), j));
        if (!is_zero_vector(total)) report.violations.push_back({i, j, k, std::move(total)});
      }
  return report;
}

LinearMap ad_matrix(const StructureTensor& L, const Vector& x) {
  const std::size_t n = L.dim();
  require_len(n, x);
  require_field(L.field(), x);
  Matrix m(L.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vector b = L.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!b[k].is_zero()) m(k, j) += x[i] * b[k];
    }
  }
  return m;
}

LinearMap ad_restricted(const StructureTensor& L, const Vector& x, const Subspace& A) {
  if (A.ambient() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "subspace ambient differs from algebra");
  const Matrix full = ad_matrix(L, x);
  Matrix m(L.field(), L.dim(), A.dim());
  for (std::size_t c = 0; c < A.dim(); ++c) m.set_column(c, full.apply(A.basis_vector(c)));
  return m;
}

StructureTensor change_basis(const StructureTensor& L, const LinearMap& P) {
  const std::size_t n = L.dim();
  if (P.rows() != n || P.cols() != n) throw Error(ErrorKind::DimensionMismatch, "basis change shape");
  if (!(P.field() == L.field())) throw Error(ErrorKind::FieldMismatch, "basis change field");
  const Matrix Pinv = inverse(P);
  StructureTensor out(L.field(), n);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(P.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.set_bracket(i, j, Pinv.apply(bracket(L, cols[i], cols[j])));
  return out;
}

StructureTensor direct_sum(const StructureTensor& a, const StructureTensor& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "direct_sum of algebras over different fields");
  const std::size_t n1 = a.dim(), n2 = b.dim(), n = n1 + n2;
  StructureTensor out(a.field(), n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i + 1; j < n1; ++j) {
      Vector v = zero_vector(a.field(), n);
      const Vector& c = a.stored_pair(i, j);
      std::copy(c.begin(), c.end(), v.begin());
      out.set_bracket(i, j, v);
    }
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = i + 1; j < n2; ++j) {
      Vector v = zero_vector(a.field(), n);
      const Vector& c = b.stored_pair(i, j);
      std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(n1));
      out.set_bracket(n1 + i, n1 + j, v);
    }
  return out;
}

StructureTensor semidirect(const std::vector<Matrix>& actions) {
  if (actions.empty()) throw Error(ErrorKind::BadParameter, "semidirect needs at least one action");
  const Field f = actions.front().field();
  const std::size_t m = actions.size();
  const std::size_t k = actions.front().rows();
  for (const auto& T : actions) {
    if (T.rows() != k || T.cols() != k) throw Error(ErrorKind::DimensionMismatch, "action shapes differ");
    if (!(T.field() == f)) throw Error(ErrorKind::FieldMismatch, "action fields differ");
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!(actions[a] * actions[b] == actions[b] * actions[a]))
        throw Error(ErrorKind::NonCommutingActions,
                    "actions " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " do not commute");
  StructureTensor out(f, m + k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < k; ++j) {
      Vector v = zero_vector(f, m + k);
      for (std::size_t r = 0; r < k; ++r) v[m + r] = actions[a](r, j);
      out.set_bracket(a, m + j, v);
    }
  return out;
}

Subspace bracket_space(const StructureTensor& L, const Subspace& S, const Subspace& T) {
  if (S.ambient() != L.dim() || T.ambient() != L.dim())
    throw Error(ErrorKind::DimensionMismatch, "bracket_space ambient");
  std::vector<Vector> out;
  for (std::size_t a = 0; a < S.dim(); ++a) {
    const Vector s = S.basis_vector(a);
    for (std::size_t b = 0; b < T.dim(); ++b) {
      Vector v = bracket(L, s, T.basis_vector(b));
      if (!is_zero_vector(v)) out.push_back(std::move(v));
    }
  }
  return Subspace::span(L.field(), L.dim(), out);
}

bool is_ideal(const StructureTensor& L, const Subspace& S) {
  return S.contains(bracket_space(L, Subspace::full(L.field(), L.dim()), S));
}

Quotient quotient(const StructureTensor& L, const Subspace& ideal) {
  if (ideal.ambient() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "quotient ambient");
  if (!is_ideal(L, ideal)) throw Error(ErrorKind::NotAnIdeal, "quotient by a subspace that is not an ideal");
  const Field f = L.field();
  const std::size_t n = L.dim();
  const auto reps = ideal.complement_indices();
  const std::size_t q = reps.size();
  const auto& pivots = ideal.pivots();

  auto project = [&](Vector v) {
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      const Scalar c = v[pivots[r]];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!ideal.echelon()(r, k).is_zero()) v[k] -= c * ideal.echelon()(r, k);
    }
    Vector out;
    out.reserve(q);
    for (auto idx : reps) out.push_back(v[idx]);
    return out;
  };

  Matrix proj(f, q, n);
  for (std::size_t k = 0; k < n; ++k) proj.set_column(k, project(unit_vector(f, n, k)));

  StructureTensor out(f, q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) out.set_bracket(a, b, project(L.bracket_basis(reps[a], reps[b])));
  return {std::move(out), std::move(proj)};
}

StructureTensor reduce_mod_p(const StructureTensor& L, std::int64_t p) {
  if (!L.field().is_rationals()) throw Error(ErrorKind::FieldMismatch, "reduce_mod_p needs an algebra over Q");
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not an odd prime");
  const Field gf = Field::prime(p);
  const std::size_t n = L.dim();
  StructureTensor out(gf, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v;
      for (const auto& c : L.stored_pair(i, j)) v.emplace_back(gf, c.rational_part());
      out.set_bracket(i, j, v);
    }
  return out;
}

StructureTensor lift(const StructureTensor& L, Field target) {
  if (L.field() == target) return L;
  StructureTensor out(target, L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) out.set_bracket(i, j, lift(L.stored_pair(i, j), target));
  return out;
}

}  // namespace liebreadth
