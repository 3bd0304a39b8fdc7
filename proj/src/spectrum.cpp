#include "liebreadth/spectrum.hpp"

#include <algorithm>
#include <map>

#include "liebreadth/algebra.hpp"

namespace liebreadth {

namespace {

void trim(Polynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Divisors of |n| > 0, from a trial-division factorisation.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  for (unsigned long f = 2; f <= 1000000; ++f) {
    if (mpz_class(f) * f > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), f)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), f);
      ++e;
    }
    if (e > 0) factors.emplace_back(mpz_class(f), e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [prime, e] : factors) {
    const std::size_t base = out.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

std::vector<Scalar> rational_roots(const Polynomial& p) {
  const Field f = p.front().field();
  // Clear denominators to an integer polynomial.
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational_part().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(c.rational_part().get_num() * (lcm / c.rational_part().get_den()));
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (low < ints.size() && sgn(ints[low]) == 0) ++low;
  if (low > 0) roots.push_back(Scalar::zero(f));
  if (ints.size() - low <= 1) return roots;
  const auto nums = divisors(ints[low]);
  const auto dens = divisors(ints.back());
  std::vector<mpq_class> seen;
  for (const auto& q : dens)
    for (const auto& num : nums)
      for (int sign : {1, -1}) {
        mpq_class r(sign * num, q);
        r.canonicalize();
        if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
        seen.push_back(r);
        if (evaluate(p, Scalar(f, r)).is_zero()) roots.emplace_back(f, r);
      }
  return roots;
}

std::vector<Scalar> quadratic_roots(const Polynomial& p) {
  // c0 + c1 t + c2 t^2
  const Field f = p.front().field();
  const Scalar two(f, 2L);
  const Scalar disc = p[1] * p[1] - Scalar(f, 4L) * p[2] * p[0];
  Scalar root;
  if (!try_sqrt_in_field(disc, root)) return {};
  const Scalar denom = (two * p[2]).inv();
  std::vector<Scalar> out{(-p[1] + root) * denom};
  if (!root.is_zero()) out.push_back((-p[1] - root) * denom);
  return out;
}

void sort_unique(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end(), [](const Scalar& a, const Scalar& b) { return canonical_order(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Scalar evaluate(const Polynomial& p, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::size_t degree(const Polynomial& p) {
  Polynomial q = p;
  trim(q);
  return q.empty() ? 0 : q.size() - 1;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  if (!m.field().char_zero())
    throw Error(ErrorKind::UnsupportedField, "characteristic polynomial needs characteristic zero");
  const std::size_t n = m.rows();
  const Field f = m.field();
  Polynomial c(n + 1, Scalar::zero(f));
  c[n] = Scalar::one(f);
  Matrix mk = Matrix::identity(f, n);  // M_1 = I
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix am = m * mk;
    c[n - k] = -trace(am) / Scalar(f, static_cast<long>(k));
    mk = am + Matrix::identity(f, n).scaled(c[n - k]);
  }
  return c;
}

Polynomial krylov_polynomial(const Matrix& m, const Vector& v) {
  const Field f = m.field();
  std::vector<Vector> chain{v};
  while (true) {
    Vector next = m.apply(chain.back());
    Matrix cols = Matrix::from_columns(f, chain, m.rows());
    if (auto coeffs = solve(cols, next)) {
      Polynomial p;
      for (auto& c : *coeffs) p.push_back(-c);
      p.push_back(Scalar::one(f));
      return p;
    }
    chain.push_back(std::move(next));
  }
}

std::vector<Scalar> roots_in_field(const Polynomial& poly) {
  Polynomial p = poly;
  trim(p);
  if (p.size() <= 1) return {};
  const Field f = p.front().field();
  std::vector<Scalar> roots;
  if (p.size() == 2) {
    roots.push_back(-p[0] / p[1]);
  } else if (f.is_rationals()) {
    roots = rational_roots(p);
  } else if (f.is_quadratic()) {
    if (p.size() == 3) {
      roots = quadratic_roots(p);
    } else if (std::all_of(p.begin(), p.end(), [](const Scalar& s) { return s.is_rational(); })) {
      Polynomial q;
      for (const auto& c : p) q.emplace_back(Field::rationals(), c.rational_part());
      for (const auto& r : rational_roots(q)) roots.emplace_back(f, r.rational_part());
    } else {
      throw Error(ErrorKind::FieldExtensionNeeded,
                  "root search for a degree " + std::to_string(p.size() - 1) + " polynomial over " + f.to_string());
    }
  } else {
    const std::int64_t q = f.modulus();
    for (std::int64_t x = 0; x < q; ++x)
      if (evaluate(p, Scalar(f, x)).is_zero()) roots.emplace_back(f, x);
  }
  sort_unique(roots);
  return roots;
}

EigenvalueSearch find_eigenvalues(const Matrix& m) {
  const Field f = m.field();
  auto own = roots_in_field(characteristic_polynomial(m));
  if (!own.empty()) return {f, std::move(own)};
  if (!f.is_rationals())
    throw Error(ErrorKind::FieldExtensionNeeded, "no eigenvalue of the action lies in " + f.to_string());
  // Look for a quadratic factor via cyclic subspaces of the standard basis.
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Polynomial kp = krylov_polynomial(m, unit_vector(f, m.rows(), i));
    if (kp.size() != 3) continue;
    const Scalar disc = kp[1] * kp[1] - Scalar(f, 4L) * kp[0];
    auto [root, ext] = sqrt_or_extend(disc);
    const Scalar half(ext, mpq_class(1, 2));
    const Scalar b = embed(kp[1], ext);
    std::vector<Scalar> values{(-b + root) * half, (-b - root) * half};
    sort_unique(values);
    return {ext, std::move(values)};
  }
  throw Error(ErrorKind::FieldExtensionNeeded, "eigenvalues need an extension of degree greater than two");
}

}  // namespace liebreadth
