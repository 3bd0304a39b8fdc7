#include "liebreadth/recognizer.hpp"

#include "liebreadth/breadth.hpp"
#include "liebreadth/invariants.hpp"
#include "liebreadth/spectrum.hpp"

namespace liebreadth {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorKind::InconsistentWithClassification, what);
}

[[noreturn]] void precondition(const std::string& what) { throw Error(ErrorKind::PreconditionFailed, what); }

void claim(bool ok, const std::string& what) {
  if (!ok) inconsistent(what);
}

// Coordinates of v in the echelon basis of S; v must lie in S.
Vector coords_in(const Subspace& S, const Vector& v) {
  claim(S.contains(v), "vector expected in subspace");
  Vector c;
  for (std::size_t p : S.pivots()) c.push_back(v[p]);
  return c;
}

Vector combine(const std::vector<Vector>& basis, const Vector& coeffs, Field f, std::size_t n) {
  Vector v = zero_vector(f, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) v = add(v, scale(coeffs[i], basis[i]));
  return v;
}

Matrix columns(Field f, const std::vector<Vector>& cols, std::size_t n) { return Matrix::from_columns(f, cols, n); }

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

// c with w = c z, or an inconsistency when w leaves span{z}.
Scalar multiple_of(const Vector& w, const Vector& z) {
  const std::size_t p = first_nonzero(z);
  const Scalar c = w[p] / z[p];
  claim(w == scale(c, z), "bracket expected in the one-dimensional center");
  return c;
}

struct Symplectic {
  std::vector<std::pair<Vector, Vector>> pairs;  // phi(u_i, v_j) = delta_ij
  std::vector<Vector> radical;
};

// Gram reduction of phi(u, v) defined by [u, v] = phi(u, v) z on span(basis).
Symplectic symplectic_reduce(const StructureTensor& L, std::vector<Vector> pool, const Vector& z) {
  auto phi = [&](const Vector& u, const Vector& v) { return multiple_of(bracket(L, u, v), z); };
  Symplectic out;
  while (true) {
    std::size_t bi = pool.size(), bj = pool.size();
    Scalar value;
    for (std::size_t i = 0; i < pool.size() && bi == pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        value = phi(pool[i], pool[j]);
        if (!value.is_zero()) {
          bi = i;
          bj = j;
          break;
        }
      }
    if (bi == pool.size()) break;
    const Vector u = pool[bi];
    const Vector v = scale(value.inv(), pool[bj]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(bj));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(bi));
    for (auto& w : pool) w = add(sub(w, scale(phi(w, v), u)), scale(phi(w, u), v));
    out.pairs.emplace_back(u, v);
  }
  out.radical = std::move(pool);
  return out;
}

Canonical finish(const FamilyTag& tag, Field f, const std::vector<Vector>& cols, std::size_t n) {
  return {tag, columns(f, cols, n), f};
}

std::vector<Vector> standard_basis(Field f, std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(f, n, i));
  return out;
}

// Square root in the working field or one quadratic extension of Q.
std::pair<Scalar, Field> root_of(const Scalar& c) {
  try {
    return sqrt_or_extend(c);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::AlreadyExtended) throw Error(ErrorKind::FieldExtensionNeeded, e.what());
    throw;
  }
}

bool is_scalar_matrix(const Matrix& m) {
  return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1);
}

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

// Coefficients c with sum c_i T_i = target.
Vector combination_for(const std::vector<Matrix>& Ts, const Matrix& target) {
  const Field f = target.field();
  std::vector<Vector> cols;
  for (const auto& t : Ts) cols.push_back(flatten(t));
  const Matrix sys = columns(f, cols, target.rows() * target.cols());
  auto sol = solve(sys, flatten(target));
  claim(sol.has_value(), "action span does not contain the required normal form");
  return *sol;
}

}  // namespace

Scalar normalize_gamma(const Scalar& gamma) {
  if (gamma.is_zero()) throw Error(ErrorKind::BadParameter, "gamma must be nonzero");
  const Scalar inv = gamma.inv();
  if (gamma.field().is_prime()) return gamma.residue() <= inv.residue() ? gamma : inv;
  if (gamma.is_rational()) {
    auto key = [](const mpq_class& q) {
      return std::make_pair(mpz_class(abs(q.get_num() * q.get_den())), mpz_class(q.get_num()));
    };
    return key(inv.rational_part()) < key(gamma.rational_part()) ? inv : gamma;
  }
  return canonical_order(inv, gamma) < 0 ? inv : gamma;
}

Canonical canonicalize_alternating(const StructureTensor& L) {
  const Field f = L.field();
  const std::size_t n = L.dim();
  const Subspace D = derived_algebra(L);
  if (D.dim() != 1) precondition("alternating normal form needs dim[L, L] = 1");
  if (!is_nilpotent(L)) precondition("alternating normal form needs a nilpotent algebra");
  const Vector z = D.basis_vector(0);
  const Symplectic s = symplectic_reduce(L, standard_basis(f, n), z);
  std::vector<Vector> cols;
  for (const auto& [u, v] : s.pairs) {
    cols.push_back(u);
    cols.push_back(v);
  }
  // radical = Z(L); put z first and complete it from the radical vectors
  std::vector<Vector> rad{z};
  for (const auto& r : s.radical) {
    std::vector<Vector> trial = rad;
    trial.push_back(r);
    if (Subspace::span(f, n, trial).dim() == trial.size()) rad = std::move(trial);
  }
  claim(rad.size() == s.radical.size(), "radical of the bracket form must contain [L, L]");
  cols.insert(cols.end(), rad.begin(), rad.end());
  return finish(FamilyTag::heisenberg(s.pairs.size(), rad.size()), f, cols, n);
}

Canonical canonicalize_b1_solvable(const StructureTensor& L) {
  const Field f = L.field();
  const std::size_t n = L.dim();
  const Subspace D = derived_algebra(L);
  if (D.dim() != 1) precondition("breadth-one solvable normal form needs dim[L, L] = 1");
  if (is_nilpotent(L)) precondition("breadth-one solvable normal form needs a nonnilpotent algebra");
  const Vector x = D.basis_vector(0);
  Vector y;
  for (std::size_t j = 0; j < n && y.empty(); ++j) {
    const Vector img = bracket(L, x, unit_vector(f, n, j));
    if (is_zero_vector(img)) continue;
    y = scale(multiple_of(img, x).inv(), unit_vector(f, n, j));
  }
  claim(!y.empty(), "[x, L] must be nonzero");
  const Subspace M = centralizer(L, Subspace::span(f, n, {x, y}));
  claim(M.dim() + 2 == n, "centralizer of {x, y} must have codimension 2");
  std::vector<Vector> cols{x, y};
  for (const auto& m : M.basis()) cols.push_back(m);
  return finish(FamilyTag::breadth1_solvable(n), f, cols, n);
}

Canonical canonicalize_S2(const StructureTensor& input) {
  StructureTensor L = input;
  Field f = L.field();
  const std::size_t n = L.dim();
  const Subspace D = derived_algebra(L);
  const Subspace Z = center(L);
  if (D.dim() != 3 || n - Z.dim() != 3) precondition("S2 normal form needs dim[L, L] = 3 and dim L/Z(L) = 3");
  if (!D.contains(Z)) precondition("algebra is not pure");
  claim(n == 4 && Z.dim() == 1, "S2 algebra must have dimension 4 with one-dimensional center");

  // [L, L] is Heisenberg: find x, y in it with [x, y] = z spanning [D, D].
  const Subspace DD = bracket_space(L, D, D);
  claim(DD.dim() == 1 && bracket_space(L, D, DD).is_zero(), "derived algebra must be Heisenberg");
  Vector x, y, z;
  for (std::size_t i = 0; i < 3 && z.empty(); ++i)
    for (std::size_t j = i + 1; j < 3 && z.empty(); ++j) {
      const Vector b = bracket(L, D.basis_vector(i), D.basis_vector(j));
      if (is_zero_vector(b)) continue;
      x = D.basis_vector(i);
      y = D.basis_vector(j);
      z = b;
    }
  claim(Z.contains(z), "center must equal [[L, L], [L, L]]");
  const Subspace xyz = Subspace::span(f, n, {x, y, z});
  auto in_xyz = [&](const Vector& v) {
    // coordinates (a, b, c) with v = a x + b y + c z
    const Matrix B = columns(f, {x, y, z}, n);
    auto sol = solve(B, v);
    claim(sol.has_value(), "bracket expected in [L, L]");
    return *sol;
  };
  Vector w = unit_vector(f, n, D.complement_indices().front());
  auto a = in_xyz(bracket(L, w, x));
  auto b = in_xyz(bracket(L, w, y));
  // w - beta3 x + alpha3 y clears the z-components
  w = add(sub(w, scale(b[2], x)), scale(a[2], y));
  a = in_xyz(bracket(L, w, x));
  b = in_xyz(bracket(L, w, y));
  claim(a[2].is_zero() && b[2].is_zero(), "z-components of [w, x], [w, y] must vanish");
  claim(b[1] == -a[0], "trace of ad_w on span{x, y} must vanish");
  const Scalar disc = a[0] * a[0] + a[1] * b[0];
  claim(!disc.is_zero(), "ad_w on span{x, y} must have nonzero eigenvalues");
  auto [lambda, ext] = root_of(disc);
  if (!(ext == f)) {
    L = lift(L, ext);
    x = lift(x, ext);
    y = lift(y, ext);
    w = lift(w, ext);
    for (auto& s : a) s = embed(s, ext);
    for (auto& s : b) s = embed(s, ext);
    f = ext;
  }
  // A = [[alpha1, beta1], [alpha2, -alpha1]] on (x, y)
  Matrix A(f, 2, 2);
  A(0, 0) = a[0];
  A(1, 0) = a[1];
  A(0, 1) = b[0];
  A(1, 1) = b[1];
  auto eigvec = [&](const Scalar& mu) {
    const auto k = kernel(A - Matrix::identity(f, 2).scaled(mu));
    claim(k.size() == 1, "eigenspaces of ad_w must be lines");
    return add(scale(k[0][0], x), scale(k[0][1], y));
  };
  const Vector xp = eigvec(lambda);
  const Vector yp = eigvec(-lambda);
  const Vector zp = bracket(L, xp, yp);
  claim(!is_zero_vector(zp), "[x', y'] must be nonzero");
  const Vector x1 = scale(lambda.inv(), w);
  return finish(FamilyTag::simple(Family::L1), f, {x1, xp, yp, zp}, n);
}

Canonical canonicalize_depth1(const StructureTensor& L) {
  const Field f = L.field();
  const std::size_t n = L.dim();
  const Subspace D = derived_algebra(L);
  const auto lcs = lower_central_series(L);
  if (D.dim() != 2 || lcs.back().dim() != 1)
    precondition("depth-one normal form needs dim[L, L] = 2 and a one-dimensional terminal L^k");
  const Subspace Z = center(L);
  claim(Z.dim() == 1, "center must be one-dimensional");
  const Vector x = lcs.back().basis_vector(0);
  const Vector z = Z.basis_vector(0);
  claim(D == Subspace::span(f, n, {x, z}), "[L, L] must be spanned by x and z");

  Vector y;
  for (std::size_t j = 0; j < n && y.empty(); ++j) {
    const Vector img = bracket(L, x, unit_vector(f, n, j));
    if (is_zero_vector(img)) continue;
    y = scale(multiple_of(img, x).inv(), unit_vector(f, n, j));
  }
  claim(!y.empty(), "x must not be central");

  // [y, C(x)] lies in [L, L] = span{x, z}; K is the part of C(x) whose
  // bracket with y has no x-component. K complements x in C(x).
  const Matrix xz = columns(f, {x, z}, n);
  auto x_part = [&](const Vector& u) {
    auto c = solve(xz, bracket(L, y, u));
    claim(c.has_value(), "[y, C(x)] must lie in [L, L]");
    return (*c)[0];
  };
  const auto cx = centralizer(L, Subspace::span(f, n, {x})).basis();
  std::size_t pivot = cx.size();
  std::vector<Scalar> vals;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    vals.push_back(x_part(cx[i]));
    if (pivot == cx.size() && !vals.back().is_zero()) pivot = i;
  }
  claim(pivot < cx.size(), "ad_y must move x");
  std::vector<Vector> K;
  for (std::size_t i = 0; i < cx.size(); ++i)
    if (i != pivot) K.push_back(sub(cx[i], scale(vals[i] / vals[pivot], cx[pivot])));

  const Symplectic s = symplectic_reduce(L, K, z);
  // y' = y minus its pairing with the symplectic part, so y' centralizes it
  auto phi_y = [&](const Vector& u) { return multiple_of(bracket(L, y, u), z); };
  Vector yp = y;
  for (const auto& [u, v] : s.pairs) yp = add(sub(yp, scale(phi_y(v), u)), scale(phi_y(u), v));

  std::vector<Vector> rad{z};
  for (const auto& r : s.radical)
    if (!Subspace::span(f, n, rad).contains(r)) rad.push_back(r);
  claim(rad.size() == s.radical.size() && rad.size() <= 2, "radical of the bracket form on K must have dimension at most 2");

  std::vector<Vector> cols{x, yp};
  if (rad.size() == 2) {
    const Scalar c = phi_y(rad[1]);
    claim(!c.is_zero(), "radical vector outside span{z} must not commute with y");
    cols.push_back(scale(c.inv(), rad[1]));
  }
  for (const auto& [u, v] : s.pairs) {
    cols.push_back(u);
    cols.push_back(v);
  }
  cols.push_back(z);
  const std::size_t k = s.pairs.size();
  if (rad.size() == 1) {
    claim(k >= 1, "L2 needs a nondegenerate part");
    return finish(FamilyTag::l2(2 * k), f, cols, n);
  }
  return finish(FamilyTag::l3(2 * k + 1), f, cols, n);
}

Canonical canonicalize_depth2(const StructureTensor& input) {
  StructureTensor L = input;
  Field f = L.field();
  const std::size_t n = L.dim();
  const Subspace D = derived_algebra(L);
  const auto lcs = lower_central_series(L);
  if (D.dim() != 2 || lcs.back().dim() != 2)
    precondition("depth-two normal form needs dim[L, L] = 2 and a two-dimensional terminal L^k");
  claim(center(L).is_zero(), "center must vanish");
  claim(is_abelian_subspace(L, D), "[L, L] must be abelian");
  const Subspace C = centralizer(L, D);
  claim(is_abelian_subspace(L, C), "C_L([L, L]) must be abelian");
  claim(C.is_zero() || C.contains(D), "nonzero C_L([L, L]) must contain [L, L]");

  const std::size_t m = n - 2;
  if (m == 0 || m >= 3)
    inconsistent("an abelian complement of dimension " + std::to_string(m) +
                 " cannot act faithfully and commutatively on a two-dimensional [L, L] with trivial center");

  // Abelian complement: a_i + v_i with T_{a_i} v_j - T_{a_j} v_i = -[a_i, a_j].
  std::vector<Vector> a;
  for (std::size_t idx : D.complement_indices()) a.push_back(unit_vector(f, n, idx));
  const std::vector<Vector> d = D.basis();
  if (m == 2) {
    Matrix sys(f, n, 4);  // unknowns s_{1,1}, s_{1,2}, s_{2,1}, s_{2,2}
    for (std::size_t t = 0; t < 2; ++t) {
      const Vector p = bracket(L, a[0], d[t]);   // coefficient of s_{2,t}
      const Vector q = bracket(L, a[1], d[t]);   // coefficient of s_{1,t}, negated
      for (std::size_t r = 0; r < n; ++r) {
        sys(r, 2 + t) = p[r];
        sys(r, t) = -q[r];
      }
    }
    auto s = solve(sys, scale(Scalar(f, -1L), bracket(L, a[0], a[1])));
    claim(s.has_value(), "no abelian complement to [L, L]");
    a[0] = add(a[0], add(scale((*s)[0], d[0]), scale((*s)[1], d[1])));
    a[1] = add(a[1], add(scale((*s)[2], d[0]), scale((*s)[3], d[1])));
    claim(is_zero_vector(bracket(L, a[0], a[1])), "complement must be abelian");
  }
  auto action = [&](const Vector& u) {
    Matrix T(L.field(), 2, 2);
    for (std::size_t c = 0; c < 2; ++c) {
      const Vector img = coords_in(lift(D, L.field()), bracket(L, u, lift(d[c], L.field())));
      T(0, c) = img[0];
      T(1, c) = img[1];
    }
    return T;
  };
  auto extend = [&](Field ext) {
    if (ext == f) return;
    L = lift(L, ext);
    for (auto& v : a) v = lift(v, ext);
    f = ext;
  };
  auto in_ambient = [&](const Vector& dc) {  // D-coordinates to ambient
    return add(scale(dc[0], lift(d[0], f)), scale(dc[1], lift(d[1], f)));
  };
  auto element = [&](const Vector& coeffs) { return combine(a, coeffs, f, n); };

  std::vector<Matrix> Ts;
  for (const auto& u : a) Ts.push_back(action(u));

  if (m == 2) {
    Vector id_coeffs;
    {
      const auto sol = solve(columns(f, {flatten(Ts[0]), flatten(Ts[1])}, 4), flatten(Matrix::identity(f, 2)));
      claim(sol.has_value(), "span of the actions must contain the identity");
      id_coeffs = *sol;
    }
    const Matrix X = is_scalar_matrix(Ts[0]) ? Ts[1] : Ts[0];
    claim(!is_scalar_matrix(X), "actions must span a two-dimensional space");
    const Scalar tr = X(0, 0) + X(1, 1);
    const Scalar det = X(0, 0) * X(1, 1) - X(0, 1) * X(1, 0);
    const Scalar disc = tr * tr - Scalar(f, 4L) * det;
    if (!disc.is_zero()) {
      const auto eig = find_eigenvalues(X);
      extend(eig.field);
      for (auto& T : Ts) T = lift(T, f);
      const Matrix Xf = lift(X, f);
      claim(eig.values.size() == 2, "diagonalizable action must have two eigenvalues");
      std::vector<Vector> ev;
      for (const auto& lam : eig.values) {
        const auto k = kernel(Xf - Matrix::identity(f, 2).scaled(lam));
        claim(k.size() == 1, "eigenspaces must be lines");
        ev.push_back(k[0]);
      }
      const Matrix P = columns(f, ev, 2);
      const Matrix Pinv = inverse(P);
      Matrix E1(f, 2, 2), E2(f, 2, 2);
      E1(0, 0) = Scalar::one(f);
      E2(1, 1) = Scalar::one(f);
      const Vector c1 = combination_for(Ts, P * E1 * Pinv);
      const Vector c2 = combination_for(Ts, P * E2 * Pinv);
      return finish(FamilyTag::simple(Family::L5), f,
                    {element(c1), in_ambient(ev[0]), element(c2), in_ambient(ev[1])}, n);
    }
    // X = lambda I + N with N nilpotent of rank one
    const Scalar lambda = tr / Scalar(f, 2L);
    const Matrix N = X - Matrix::identity(f, 2).scaled(lambda);
    Vector v4 = unit_vector(f, 2, 0);
    if (is_zero_vector(N.apply(v4))) v4 = unit_vector(f, 2, 1);
    const Vector v3 = N.apply(v4);
    const Matrix Q = columns(f, {v3, v4}, 2);
    Matrix E12(f, 2, 2);
    E12(0, 1) = Scalar::one(f);
    const Vector c1 = combination_for(Ts, Q * E12 * inverse(Q));
    return finish(FamilyTag::simple(Family::L6), f, {element(c1), element(id_coeffs), in_ambient(v3), in_ambient(v4)},
                  n);
  }

  // m == 1
  const Matrix T = Ts[0];
  if (is_scalar_matrix(T)) {
    const Scalar lambda = T(0, 0);
    claim(!lambda.is_zero(), "action must be nonzero");
    return finish(FamilyTag::l8(Scalar::one(f)), f, {scale(lambda.inv(), a[0]), lift(d[0], f), lift(d[1], f)}, n);
  }
  const Scalar tr = T(0, 0) + T(1, 1);
  const Scalar det = T(0, 0) * T(1, 1) - T(0, 1) * T(1, 0);
  claim(!det.is_zero(), "a zero weight forces breadth one");
  const Scalar disc = tr * tr - Scalar(f, 4L) * det;
  if (disc.is_zero()) {
    const Scalar lambda = tr / Scalar(f, 2L);
    const Matrix Nl = (T - Matrix::identity(f, 2).scaled(lambda)).scaled(lambda.inv());
    Vector q = unit_vector(f, 2, 0);
    if (is_zero_vector(Nl.apply(q))) q = unit_vector(f, 2, 1);
    const Vector p = Nl.apply(q);
    return finish(FamilyTag::simple(Family::L7), f, {scale(lambda.inv(), a[0]), in_ambient(p), in_ambient(q)}, n);
  }
  const auto eig = find_eigenvalues(T);
  extend(eig.field);
  claim(eig.values.size() == 2, "diagonalizable action must have two eigenvalues");
  const Matrix Tf = lift(T, f);
  std::vector<Vector> ev;
  for (const auto& lam : eig.values) {
    const auto k = kernel(Tf - Matrix::identity(f, 2).scaled(lam));
    claim(k.size() == 1, "eigenspaces must be lines");
    ev.push_back(k[0]);
  }
  const Scalar gamma = eig.values[1] / eig.values[0];
  const Scalar rep = normalize_gamma(gamma);
  const std::size_t first = rep == gamma ? 0 : 1;
  const std::size_t second = 1 - first;
  return finish(FamilyTag::l8(rep), f,
                {scale(eig.values[first].inv(), a[0]), in_ambient(ev[first]), in_ambient(ev[second])}, n);
}

ClassificationReport classify(const StructureTensor& L) {
  if (!L.field().char_zero()) precondition("classification works over Q or Q(sqrt d) only");
  if (!validate(L).ok()) precondition("input violates the Jacobi identity");
  if (!is_solvable(L)) precondition("algebra is not solvable");
  if (!is_pure(L)) precondition("algebra is not pure: its center leaves [L, L]");

  const std::size_t derived = derived_algebra(L).dim();
  BreadthOptions opts;
  const BreadthResult b = breadth(L, opts);
  if (b.certainty != Certainty::Exact) precondition("breadth could not be certified exactly");
  if (b.value > 2) precondition("breadth " + std::to_string(b.value) + " exceeds 2");

  Canonical c;
  if (b.value == 0) {
    c = {FamilyTag::abelian(L.dim()), Matrix::identity(L.field(), L.dim()), L.field()};
  } else if (b.value == 1) {
    c = is_nilpotent(L) ? canonicalize_alternating(L) : canonicalize_b1_solvable(L);
  } else {
    if (is_nilpotent(L)) precondition("breadth-two nilpotent algebras are outside the classification");
    if (derived == 3)
      c = canonicalize_S2(L);
    else if (derived == 2)
      c = lower_central_series(L).back().dim() == 1 ? canonicalize_depth1(L) : canonicalize_depth2(L);
    else
      inconsistent("breadth two with dim[L, L] = " + std::to_string(derived));
  }

  ClassificationReport report;
  report.family = c.tag;
  report.witness = c.witness;
  report.field_used = c.field;
  if (c.tag.family == Family::L8) {
    const Scalar rep = normalize_gamma(*c.tag.gamma);
    report.parameter_orbit = std::make_pair(rep, rep.inv());
  }
  report.verified = rank(c.witness) == L.dim() && change_basis(lift(L, c.field), c.witness) == build(c.tag, c.field);
  return report;
}

bool verify_isomorphism(const StructureTensor& L, const StructureTensor& Lp, const Matrix& P) {
  const std::size_t n = L.dim();
  if (Lp.dim() != n || P.rows() != n || P.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "isomorphism check needs equal dimensions and a square map");
  Field f = P.field();
  if (!(L.field() == f) && !L.field().is_rationals()) f = L.field();
  if (!(Lp.field() == f) && !Lp.field().is_rationals()) f = Lp.field();
  const StructureTensor A = lift(L, f);
  const StructureTensor B = lift(Lp, f);
  const Matrix Pf = lift(P, f);
  if (rank(Pf) != n) return false;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Pf.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(Pf.apply(A.bracket_basis(i, j)) == bracket(B, images[i], images[j]))) return false;
  return true;
}

IsomorphismResult are_isomorphic(const StructureTensor& L, const StructureTensor& Lp) {
  const ClassificationReport r1 = classify(L);
  const ClassificationReport r2 = classify(Lp);
  IsomorphismResult out;
  out.isomorphic = r1.family == r2.family;
  if (!out.isomorphic) return out;
  Field f = r1.field_used;
  if (!(r2.field_used == f)) {
    if (f.is_rationals())
      f = r2.field_used;
    else if (!r2.field_used.is_rationals())
      return out;  // witnesses live in different extensions
  }
  // W1 maps model coordinates into L, W2 into L'; L -> L' is W2 W1^-1.
  out.witness = lift(r2.witness, f) * inverse(lift(r1.witness, f));
  return out;
}

}  // namespace liebreadth
