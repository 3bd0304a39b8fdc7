#include "liebreadth/breadth.hpp"

#include <map>
#include <unordered_map>

#include "liebreadth/invariants.hpp"
#include "liebreadth/random.hpp"

namespace liebreadth {

namespace {

// Pencil M(t) = sum_i t_i P_i with P_i = ad_{e_i} on the chosen domain.
struct Pencil {
  Field field;
  std::size_t vars = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Matrix> parts;

  Matrix at(const Vector& t) const {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < vars; ++i) {
      if (t[i].is_zero()) continue;
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          if (!parts[i](r, c).is_zero()) m(r, c) += t[i] * parts[i](r, c);
    }
    return m;
  }
};

Pencil make_pencil(const StructureTensor& L, const Subspace& A) {
  Pencil p{L.field(), L.dim(), L.dim(), A.dim(), {}};
  for (std::size_t i = 0; i < L.dim(); ++i) p.parts.push_back(ad_restricted(L, unit_vector(L.field(), L.dim(), i), A));
  return p;
}

// ---- sparse multivariate polynomials, exponents packed 4 bits per variable

using Monomial = std::uint64_t;
using Poly = std::map<Monomial, Scalar>;

constexpr std::size_t kMaxSymbolicVars = 16;

void add_term(Poly& p, Monomial m, const Scalar& c) {
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_term(out, ma + mb, ca * cb);
  return out;
}

Scalar evaluate(const Poly& p, const std::vector<Scalar>& point) {
  Scalar acc = Scalar::zero(point.front().field());
  for (const auto& [m, c] : p) {
    Scalar term = c;
    for (std::size_t v = 0; v < point.size(); ++v) {
      const unsigned e = (m >> (4 * v)) & 0xF;
      for (unsigned k = 0; k < e; ++k) term *= point[v];
    }
    acc += term;
  }
  return acc;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of (rows, cols) subset pairs the minor table visits up to size k.
std::size_t minor_table_size(const Pencil& p, std::size_t k) {
  std::size_t total = 0;
  for (std::size_t j = 1; j <= k; ++j) total += binomial(p.rows, j) * binomial(p.cols, j);
  return total;
}

// First k x k minor of M(t) that is a nonzero polynomial, in table order.
// Minors are built level by level through Laplace expansion along the
// lowest column of each column set.
std::optional<Poly> nonzero_minor(const Pencil& p, std::size_t k) {
  if (k == 0 || k > p.rows || k > p.cols) return std::nullopt;
  std::vector<std::vector<Poly>> entry(p.rows, std::vector<Poly>(p.cols));
  for (std::size_t r = 0; r < p.rows; ++r)
    for (std::size_t c = 0; c < p.cols; ++c)
      for (std::size_t i = 0; i < p.vars; ++i)
        if (!p.parts[i](r, c).is_zero()) add_term(entry[r][c], Monomial{1} << (4 * i), p.parts[i](r, c));

  auto key = [](std::uint32_t rmask, std::uint32_t cmask) { return (std::uint64_t{rmask} << 32) | cmask; };
  std::unordered_map<std::uint64_t, Poly> prev{{key(0, 0), Poly{{0, Scalar::one(p.field)}}}};
  for (std::size_t level = 1; level <= k; ++level) {
    std::unordered_map<std::uint64_t, Poly> cur;
    for (std::uint32_t cmask = 0; cmask < (1u << p.cols); ++cmask) {
      if (static_cast<std::size_t>(__builtin_popcount(cmask)) != level) continue;
      const unsigned c0 = __builtin_ctz(cmask);
      const std::uint32_t crest = cmask & ~(1u << c0);
      for (std::uint32_t rmask = 0; rmask < (1u << p.rows); ++rmask) {
        if (static_cast<std::size_t>(__builtin_popcount(rmask)) != level) continue;
        Poly det;
        int position = 0;
        for (unsigned r = 0; r < p.rows; ++r) {
          if (!(rmask & (1u << r))) continue;
          const auto& sub = prev.at(key(rmask & ~(1u << r), crest));
          if (!entry[r][c0].empty() && !sub.empty()) {
            Poly term = multiply(entry[r][c0], sub);
            const bool negate = position % 2 == 1;
            for (auto& [m, c] : term) add_term(det, m, negate ? -c : c);
          }
          ++position;
        }
        if (level == k && !det.empty()) return det;
        cur.emplace(key(rmask, cmask), std::move(det));
      }
    }
    prev = std::move(cur);
  }
  return std::nullopt;
}

// A point of {0..deg}^n where the nonzero polynomial does not vanish.
Vector nonvanishing_point(const Poly& poly, Field f, std::size_t vars, std::size_t deg) {
  std::vector<std::size_t> digits(vars, 0);
  std::vector<Scalar> point(vars, Scalar::zero(f));
  while (true) {
    for (std::size_t v = 0; v < vars; ++v) point[v] = Scalar(f, static_cast<long>(digits[v]));
    if (!evaluate(poly, point).is_zero()) return point;
    std::size_t v = 0;
    while (v < vars && ++digits[v] > deg) digits[v++] = 0;
    if (v == vars) throw Error(ErrorKind::InconsistentWithClassification, "nonzero minor vanished on the whole grid");
  }
}

// ---- GF(p): every projective point, ranks mod p on machine integers

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = rank;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[rank]);
    const std::int64_t iv = inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

BreadthResult enumerate_projective(const Pencil& pen, std::size_t upper) {
  const std::int64_t p = pen.field.modulus();
  const std::size_t n = pen.vars;
  std::vector<std::vector<std::vector<std::int64_t>>> parts(n);
  for (std::size_t i = 0; i < n; ++i) {
    parts[i].assign(pen.rows, std::vector<std::int64_t>(pen.cols));
    for (std::size_t r = 0; r < pen.rows; ++r)
      for (std::size_t c = 0; c < pen.cols; ++c) parts[i][r][c] = pen.parts[i](r, c).residue();
  }
  BreadthResult best{0, zero_vector(pen.field, n), Certainty::Exact, 0, 0};
  std::vector<std::int64_t> t(n, 0);
  std::vector<std::vector<std::int64_t>> m(pen.rows, std::vector<std::int64_t>(pen.cols));
  for (std::size_t lead = 0; lead < n && best.value < upper; ++lead) {
    std::fill(t.begin(), t.end(), 0);
    t[lead] = 1;
    while (true) {
      for (std::size_t r = 0; r < pen.rows; ++r)
        for (std::size_t c = 0; c < pen.cols; ++c) {
          std::int64_t s = 0;
          for (std::size_t i = lead; i < n; ++i) s = (s + t[i] * parts[i][r][c]) % p;
          m[r][c] = s;
        }
      const std::size_t rk = rank_mod_p(m, p);
      if (rk > best.value) {
        best.value = rk;
        for (std::size_t i = 0; i < n; ++i) best.witness[i] = Scalar(pen.field, static_cast<long>(t[i]));
        if (rk >= upper) return best;
      }
      // odometer over coordinates after the leading one, last fastest
      bool advanced = false;
      for (std::size_t i = n; i-- > lead + 1;) {
        if (++t[i] < p) {
          advanced = true;
          break;
        }
        t[i] = 0;
      }
      if (!advanced) break;
    }
  }
  return best;
}

// ---- characteristic zero

BreadthResult generic_rank(const Pencil& pen, std::size_t upper, const BreadthOptions& opts) {
  const std::size_t n = pen.vars;
  BreadthResult best{0, zero_vector(pen.field, n), Certainty::MonteCarlo, opts.trials, opts.entry_bound};
  // Basis vectors first: cheap, deterministic, and readable witnesses.
  for (std::size_t i = 0; i < n && best.value < upper; ++i) {
    const Vector e = unit_vector(pen.field, n, i);
    const std::size_t rk = rank(pen.at(e));
    if (rk > best.value) {
      best.value = rk;
      best.witness = e;
    }
  }
  SeedStream stream(opts.seed, 0);
  for (std::size_t trial = 0; trial < opts.trials && best.value < upper; ++trial) {
    Vector t(n);
    for (auto& s : t) s = random_scalar(pen.field, opts.entry_bound, stream);
    const std::size_t rk = rank(pen.at(t));
    if (rk > best.value) {
      best.value = rk;
      best.witness = std::move(t);
    }
  }
  if (best.value >= upper) {
    best.certainty = Certainty::Exact;
    return best;
  }
  bool symbolic = opts.method == BreadthOptions::Method::Symbolic;
  if (opts.method == BreadthOptions::Method::Auto)
    symbolic = n <= 5 || (n <= kMaxSymbolicVars && minor_table_size(pen, best.value + 1) <= 4000);
  if (!symbolic) return best;
  if (n > kMaxSymbolicVars) throw Error(ErrorKind::BudgetExceeded, "symbolic breadth limited to 16 variables");
  while (best.value < upper) {
    const auto minor = nonzero_minor(pen, best.value + 1);
    if (!minor) break;
    Vector t = nonvanishing_point(*minor, pen.field, n, best.value + 1);
    best.value = rank(pen.at(t));
    best.witness = std::move(t);
  }
  best.certainty = Certainty::Exact;
  best.trials = 0;
  best.entry_bound = 0;
  return best;
}

BreadthResult breadth_on(const StructureTensor& L, const Subspace& A, std::size_t upper, const BreadthOptions& opts) {
  const Pencil pen = make_pencil(L, A);
  if (upper == 0 || A.dim() == 0) return {0, zero_vector(L.field(), L.dim()), Certainty::Exact, 0, 0};
  if (L.field().is_prime()) return enumerate_projective(pen, upper);
  return generic_rank(pen, upper, opts);
}

void require_ideal(const StructureTensor& L, const Subspace& A) {
  if (A.ambient() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "subspace ambient differs from algebra dimension");
  if (!is_ideal(L, A)) throw Error(ErrorKind::NotAnIdeal, "subspace is not an ideal");
}

}  // namespace

std::size_t breadth_of(const StructureTensor& L, const Vector& x) { return rank(ad_matrix(L, x)); }

std::size_t breadth_rel(const StructureTensor& L, const Subspace& A, const Vector& x) {
  require_ideal(L, A);
  return rank(ad_restricted(L, x, A));
}

BreadthResult breadth(const StructureTensor& L, const BreadthOptions& opts) {
  const std::size_t n = L.dim();
  const Subspace full = Subspace::full(L.field(), n);
  const std::size_t derived = derived_algebra(L).dim();
  if (derived == 0) return {0, zero_vector(L.field(), n), Certainty::Exact, 0, 0};
  if (opts.use_shortcuts && derived == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector e = unit_vector(L.field(), n, i);
      if (breadth_of(L, e) == 1) return {1, std::move(e), Certainty::Exact, 0, 0};
    }
  }
  // ad_x kills x and Z(L): b <= n - dim Z - 1 for a nonabelian L.
  const std::size_t upper = std::min(derived, n - center(L).dim() - 1);
  return breadth_on(L, full, upper, opts);
}

BreadthResult breadth_rel_max(const StructureTensor& L, const Subspace& A, const BreadthOptions& opts) {
  require_ideal(L, A);
  const std::size_t upper = bracket_space(L, A, Subspace::full(L.field(), L.dim())).dim();
  return breadth_on(L, A, upper, opts);
}

bool char_breadth1(const StructureTensor& L, const BreadthOptions& opts) {
  BreadthOptions o = opts;
  o.use_shortcuts = false;
  return (breadth(L, o).value == 1) == (derived_algebra(L).dim() == 1);
}

Breadth2Check char_breadth2(const StructureTensor& L, const BreadthOptions& opts) {
  if (!is_solvable(L)) throw Error(ErrorKind::NotSolvable, "breadth-two characterization needs a solvable algebra");
  BreadthOptions o = opts;
  o.use_shortcuts = false;
  const std::size_t d = derived_algebra(L).dim();
  Breadth2Case fired = Breadth2Case::None;
  if (d == 2)
    fired = Breadth2Case::S1;
  else if (d == 3 && L.dim() - center(L).dim() == 3)
    fired = Breadth2Case::S2;
  const bool b2 = breadth(L, o).value == 2;
  return {b2 == (fired != Breadth2Case::None), fired};
}

const char* to_string(Breadth2Case c) {
  switch (c) {
    case Breadth2Case::S1: return "S1";
    case Breadth2Case::S2: return "S2";
    default: return "None";
  }
}

const char* to_string(Certainty c) { return c == Certainty::Exact ? "Exact" : "MonteCarlo"; }

}  // namespace liebreadth
