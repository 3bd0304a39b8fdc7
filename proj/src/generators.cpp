#include "liebreadth/generators.hpp"

#include <algorithm>
#include <thread>

#include "liebreadth/breadth.hpp"
#include "liebreadth/catalog.hpp"
#include "liebreadth/random.hpp"

namespace liebreadth {

namespace {

Scalar draw(Field f, std::int64_t bound, SeedStream& s) {
  if (f.is_prime()) return Scalar(f, static_cast<long>(s.uniform(0, f.modulus() - 1)));
  return Scalar(f, static_cast<long>(s.uniform(-bound, bound)));
}

}  // namespace

Matrix random_invertible(std::size_t n, Field field, std::int64_t bound, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "random_invertible needs n >= 1");
  if (bound < 1) throw Error(ErrorKind::BadParameter, "random_invertible needs bound >= 1");
  SeedStream s(seed, 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = draw(field, bound, s);
    if (rank(m) == n) return m;
  }
  throw Error(ErrorKind::GeneratorStuck, "no invertible matrix after 1000 draws");
}

Matrix random_unimodular(std::size_t n, std::int64_t bound, std::uint64_t seed) {
  const Field Q = Field::rationals();
  SeedStream s(seed, 2);
  Matrix lower = Matrix::identity(Q, n), upper = Matrix::identity(Q, n), perm(Q, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      lower(r, c) = Scalar(Q, static_cast<long>(s.uniform(-bound, bound)));
      upper(c, r) = Scalar(Q, static_cast<long>(s.uniform(-bound, bound)));
    }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), s.engine());
  for (std::size_t i = 0; i < n; ++i) perm(i, order[i]) = Scalar::one(Q);
  return perm * lower * upper;
}

StructureTensor random_solvable(std::size_t m, std::size_t k, Field field, std::int64_t bound, std::uint64_t seed) {
  if (m == 0 || k == 0) throw Error(ErrorKind::BadParameter, "random_solvable needs m, k >= 1");
  SeedStream s(seed, 3);
  Matrix U(field, k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = r; c < k; ++c) U(r, c) = draw(field, bound, s);
  std::vector<Matrix> powers{Matrix::identity(field, k)};
  for (std::size_t j = 1; j < k; ++j) powers.push_back(powers.back() * U);
  std::vector<Matrix> actions;
  for (std::size_t a = 0; a < m; ++a) {
    Matrix T(field, k, k);
    for (const auto& P : powers) T = T + P.scaled(draw(field, bound, s));
    actions.push_back(std::move(T));
  }
  return change_basis(semidirect(actions), random_invertible(m + k, field, 2, seed ^ 0x51ab1eULL));
}

StructureTensor random_nilpotent(std::uint64_t seed, Field field, std::size_t max_blocks) {
  SeedStream s(seed, 4);
  StructureTensor L(field, 0);
  const auto blocks = static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(max_blocks)));
  for (std::size_t b = 0; b < blocks; ++b)
    L = direct_sum(L, build(FamilyTag::heisenberg(static_cast<std::size_t>(s.uniform(1, 2)), 1), field));
  std::size_t extra = static_cast<std::size_t>(s.uniform(0, 2));
  if (L.dim() + extra == 0) extra = 1;
  L = direct_sum(L, StructureTensor(field, extra));
  return change_basis(L, random_invertible(L.dim(), field, 2, seed ^ 0x4e11ULL));
}

StructureTensor add_abelian_summand(const StructureTensor& L, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::BadParameter, "add_abelian_summand needs m >= 1");
  return direct_sum(L, StructureTensor(L.field(), m));
}

EnumerationStats enumerate_gfp(std::int64_t p, std::size_t n,
                               const std::function<void(const StructureTensor&, std::size_t)>& visit, unsigned jobs,
                               std::uint64_t budget) {
  const Field F = Field::prime(p);
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t slots = pairs * n;
  // total = p^slots, checked against the budget without overflow
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    if (total > budget / static_cast<std::uint64_t>(p))
      throw Error(ErrorKind::BudgetExceeded, "p^(n * n(n-1)/2) exceeds the enumeration budget");
    total *= static_cast<std::uint64_t>(p);
  }
  if (pairs == 0) {
    EnumerationStats st{1, 1, {{0, 1}}};
    visit(StructureTensor(F, n), 0);
    return st;
  }
  // shard = coefficients of the first pair; remaining slots enumerated inside
  std::uint64_t shards = 1;
  for (std::size_t i = 0; i < n; ++i) shards *= static_cast<std::uint64_t>(p);
  const std::uint64_t per_shard = total / shards;

  auto run_shard = [&](std::uint64_t shard, EnumerationStats& st) {
    std::vector<std::int64_t> digits(slots, 0);
    std::uint64_t head = shard;
    for (std::size_t i = 0; i < n; ++i) {
      digits[i] = static_cast<std::int64_t>(head % static_cast<std::uint64_t>(p));
      head /= static_cast<std::uint64_t>(p);
    }
    for (std::uint64_t idx = 0; idx < per_shard; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = n; i < slots; ++i) {
        digits[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
        rest /= static_cast<std::uint64_t>(p);
      }
      StructureTensor L(F, n);
      std::size_t slot = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Vector v(n);
          for (std::size_t k = 0; k < n; ++k) v[k] = Scalar(F, static_cast<long>(digits[slot++]));
          L.set_bracket(i, j, v);
        }
      ++st.total;
      if (!validate(L).ok()) continue;
      ++st.jacobi_ok;
      const std::size_t b = breadth(L).value;
      ++st.breadth_histogram[b];
      visit(L, b);
    }
  };

  jobs = std::max(1u, jobs);
  std::vector<EnumerationStats> partial(jobs);
  auto worker = [&](unsigned w) {
    for (std::uint64_t shard = w; shard < shards; shard += jobs) run_shard(shard, partial[w]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  EnumerationStats out;
  for (const auto& st : partial) {
    out.total += st.total;
    out.jacobi_ok += st.jacobi_ok;
    for (const auto& [b, c] : st.breadth_histogram) out.breadth_histogram[b] += c;
  }
  return out;
}

}  // namespace liebreadth
