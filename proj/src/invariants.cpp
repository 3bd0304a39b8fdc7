#include "liebreadth/invariants.hpp"

#include "liebreadth/spectrum.hpp"

namespace liebreadth {

std::vector<Subspace> derived_series(const StructureTensor& L) {
  std::vector<Subspace> series{Subspace::full(L.field(), L.dim())};
  while (true) {
    Subspace next = bracket_space(L, series.back(), series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

std::vector<Subspace> lower_central_series(const StructureTensor& L) {
  const Subspace full = Subspace::full(L.field(), L.dim());
  std::vector<Subspace> series{full};
  while (true) {
    Subspace next = bracket_space(L, full, series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

Subspace derived_algebra(const StructureTensor& L) {
  const Subspace full = Subspace::full(L.field(), L.dim());
  return bracket_space(L, full, full);
}

Subspace centralizer(const StructureTensor& L, const Subspace& S) {
  const std::size_t n = L.dim();
  if (S.ambient() != n) throw Error(ErrorKind::DimensionMismatch, "centralizer ambient");
  // Stack ad_s for s in the basis of S: x is in the centralizer iff ad_s x = 0.
  Matrix stacked(L.field(), n * S.dim(), n);
  for (std::size_t b = 0; b < S.dim(); ++b) {
    const Matrix ad = ad_matrix(L, S.basis_vector(b));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(b * n + r, c) = ad(r, c);
  }
  if (S.dim() == 0) return Subspace::full(L.field(), n);
  return Subspace::span(L.field(), n, kernel(stacked));
}

Subspace center(const StructureTensor& L) { return centralizer(L, Subspace::full(L.field(), L.dim())); }

bool is_abelian(const StructureTensor& L) { return derived_algebra(L).is_zero(); }

bool is_solvable(const StructureTensor& L) { return derived_series(L).back().is_zero(); }

bool is_nilpotent(const StructureTensor& L) { return lower_central_series(L).back().is_zero(); }

bool is_pure(const StructureTensor& L) { return derived_algebra(L).contains(center(L)); }

bool is_abelian_subspace(const StructureTensor& L, const Subspace& S) { return bracket_space(L, S, S).is_zero(); }

Matrix killing_form(const StructureTensor& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(L, unit_vector(L.field(), n, i)));
  Matrix K(L.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Matrix p = ads[i] * ads[j];
      Scalar t = Scalar::zero(L.field());
      for (std::size_t k = 0; k < n; ++k) t += p(k, k);
      K(i, j) = t;
      K(j, i) = t;
    }
  return K;
}

bool is_semisimple(const StructureTensor& L) {
  if (!L.field().char_zero()) throw Error(ErrorKind::UnsupportedField, "semisimplicity test over GF(p)");
  if (L.dim() == 0) return false;
  return !determinant(killing_form(L)).is_zero();
}

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Matrix unflatten(Field f, const Vector& v, std::size_t q) {
  Matrix m(f, q, q);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < q; ++c) m(r, c) = v[r * q + c];
  return m;
}

// Basis of the span of the given q x q matrices.
std::vector<Matrix> matrix_span(Field f, const std::vector<Matrix>& ms, std::size_t q) {
  std::vector<Vector> flat;
  for (const auto& m : ms) flat.push_back(flatten(m));
  const Subspace s = Subspace::span(f, q * q, flat);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(unflatten(f, s.basis_vector(i), q));
  return out;
}

std::vector<Matrix> commutator_span(Field f, const std::vector<Matrix>& a, const std::vector<Matrix>& b,
                                    std::size_t q) {
  std::vector<Matrix> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y - y * x);
  return matrix_span(f, out, q);
}

std::vector<Matrix> lie_closure(Field f, const std::vector<Matrix>& gens, std::size_t q) {
  std::vector<Matrix> basis = matrix_span(f, gens, q);
  while (true) {
    std::vector<Matrix> all = basis;
    const auto brackets = commutator_span(f, basis, basis, q);
    all.insert(all.end(), brackets.begin(), brackets.end());
    auto next = matrix_span(f, all, q);
    if (next.size() == basis.size()) return basis;
    basis = std::move(next);
  }
}

// Matrix of m on the invariant subspace S in S's echelon basis.
Matrix restrict_to(const Matrix& m, const Subspace& S) {
  const std::size_t r = S.dim();
  Matrix out(m.field(), r, r);
  for (std::size_t j = 0; j < r; ++j) {
    const Vector image = m.apply(S.basis_vector(j));
    for (std::size_t i = 0; i < r; ++i) out(i, j) = image[S.pivots()[i]];
  }
  return out;
}

Vector from_coords(const Subspace& S, const Vector& coords) {
  Vector v = zero_vector(S.field(), S.ambient());
  for (std::size_t i = 0; i < S.dim(); ++i)
    if (!coords[i].is_zero()) v = add(v, scale(coords[i], S.basis_vector(i)));
  return v;
}

struct SearchState {
  Field field;
  std::vector<Matrix> maps;
  Subspace space;

  void extend_to(Field ext) {
    if (field == ext) return;
    for (auto& m : maps) m = lift(m, ext);
    space = lift(space, ext);
    field = ext;
  }
};

// Simultaneous eigenspace inside state.space for pairwise commuting maps.
void common_eigenspace(SearchState& st, const std::vector<Matrix>& commuting) {
  for (std::size_t idx = 0; idx < commuting.size(); ++idx) {
    Matrix h = lift(commuting[idx], st.field);
    const Matrix restricted = restrict_to(h, st.space);
    auto eig = find_eigenvalues(restricted);
    if (!(eig.field == st.field)) st.extend_to(eig.field);
    const Matrix r = lift(restricted, st.field);
    std::optional<Subspace> best;
    for (const auto& lambda : eig.values) {
      const Matrix shifted = r - Matrix::identity(st.field, r.rows()).scaled(lambda);
      std::vector<Vector> vs;
      for (const auto& k : kernel(shifted)) vs.push_back(from_coords(st.space, k));
      Subspace cand = Subspace::span(st.field, st.space.ambient(), vs);
      if (cand.is_zero()) continue;
      if (!best || cand.pivots().front() < best->pivots().front()) best = std::move(cand);
    }
    if (!best) throw Error(ErrorKind::NotSolvable, "no eigenvector for an element of the action");
    st.space = std::move(*best);
  }
}

}  // namespace

CommonEigenvector common_eigenvector(const std::vector<Matrix>& maps) {
  if (maps.empty()) throw Error(ErrorKind::BadParameter, "common_eigenvector needs at least one map");
  const std::size_t q = maps.front().rows();
  if (q == 0) throw Error(ErrorKind::BadParameter, "common_eigenvector on a zero space");
  for (const auto& m : maps)
    if (m.rows() != q || m.cols() != q) throw Error(ErrorKind::DimensionMismatch, "common_eigenvector shapes");
  if (!maps.front().field().char_zero())
    throw Error(ErrorKind::UnsupportedField, "common eigenvectors need characteristic zero");

  SearchState st{maps.front().field(), maps, Subspace::full(maps.front().field(), q)};
  while (true) {
    std::vector<Matrix> restricted;
    for (const auto& m : st.maps) restricted.push_back(restrict_to(m, st.space));
    const std::size_t r = st.space.dim();
    // derived series of the generated matrix Lie algebra, acting on the space
    std::vector<std::vector<Matrix>> chain{lie_closure(st.field, restricted, r)};
    while (!chain.back().empty()) {
      auto next = commutator_span(st.field, chain.back(), chain.back(), r);
      if (next.size() == chain.back().size()) throw Error(ErrorKind::NotSolvable, "action is not solvable");
      chain.push_back(std::move(next));
    }
    chain.pop_back();
    if (chain.empty()) break;  // everything acts as zero
    // A weight space of the last nonzero derived term is invariant under the
    // whole algebra; find it in coordinates of st.space.
    SearchState inner{st.field, {}, Subspace::full(st.field, r)};
    common_eigenspace(inner, chain.back());
    if (!(inner.field == st.field)) st.extend_to(inner.field);
    std::vector<Vector> vs;
    for (const auto& c : inner.space.basis()) vs.push_back(from_coords(st.space, c));
    Subspace refined = Subspace::span(st.field, q, vs);
    const bool abelian = chain.size() == 1;
    st.space = std::move(refined);
    if (abelian) break;
  }

  CommonEigenvector out{st.field, st.space.basis_vector(0), {}};
  for (const auto& m : st.maps) {
    const Vector image = m.apply(out.vector);
    const std::size_t p = st.space.pivots().front();
    const Scalar w = image[p];
    if (!(image == scale(w, out.vector))) throw Error(ErrorKind::NotSolvable, "common eigenvector check failed");
    out.weights.push_back(w);
  }
  return out;
}

Subspace maximal_abelian_ideal(const StructureTensor& input) {
  if (!input.field().char_zero())
    throw Error(ErrorKind::UnsupportedField, "maximal_abelian_ideal needs characteristic zero");
  const auto ds = derived_series(input);
  if (!ds.back().is_zero()) throw Error(ErrorKind::NotSolvable, "algebra is not solvable");
  if (ds.size() == 1) return ds.front();  // zero algebra
  if (ds.size() == 2 && ds[1].is_zero()) return ds.front();  // abelian

  StructureTensor L = input;
  Subspace A = ds[ds.size() - 2];
  const std::size_t n = L.dim();
  while (true) {
    const Subspace C = centralizer(L, A);
    if (C == A) return A;
    // coset representatives of C / A with zeros at A's pivot columns
    auto reduce = [&](Vector v) {
      for (std::size_t r = 0; r < A.dim(); ++r) {
        const Scalar c = v[A.pivots()[r]];
        if (!c.is_zero()) v = sub(v, scale(c, A.basis_vector(r)));
      }
      return v;
    };
    std::vector<Vector> reduced;
    for (const auto& c : C.basis()) reduced.push_back(reduce(c));
    const Subspace reps = Subspace::span(L.field(), n, reduced);
    const std::size_t q = reps.dim();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < n; ++i) {
      const Vector e = unit_vector(L.field(), n, i);
      Matrix T(L.field(), q, q);
      for (std::size_t j = 0; j < q; ++j) {
        const Vector image = reduce(bracket(L, e, reps.basis_vector(j)));
        for (std::size_t k = 0; k < q; ++k) T(k, j) = image[reps.pivots()[k]];
      }
      action.push_back(std::move(T));
    }
    const auto ev = common_eigenvector(action);
    Subspace reps_f = reps;
    if (!(ev.field == L.field())) {
      L = lift(L, ev.field);
      A = lift(A, ev.field);
      reps_f = lift(reps, ev.field);
    }
    Vector z = from_coords(reps_f, ev.vector);
    A = sum(A, Subspace::span(L.field(), n, {z}));
  }
}

}  // namespace liebreadth
