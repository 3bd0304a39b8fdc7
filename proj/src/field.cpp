#include "liebreadth/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace liebreadth {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::AlreadyExtended: return "AlreadyExtended";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonCommutingActions: return "NonCommutingActions";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::FieldExtensionNeeded: return "FieldExtensionNeeded";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InconsistentWithClassification: return "InconsistentWithClassification";
    case ErrorKind::GeneratorStuck: return "GeneratorStuck";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace detail {
struct FieldData {
  FieldKind kind;
  std::int64_t p = 0;
  mpz_class d;
};
}  // namespace detail

namespace {

// Descriptors are interned for the lifetime of the process.
class FieldRegistry {
 public:
  static FieldRegistry& instance() {
    static FieldRegistry registry;
    return registry;
  }

  const detail::FieldData* rationals() const { return &rationals_; }

  const detail::FieldData* prime(std::int64_t p) {
    std::lock_guard lock(mu_);
    auto& slot = primes_[p];
    if (!slot) slot = std::make_unique<detail::FieldData>(detail::FieldData{FieldKind::PrimeField, p, 0});
    return slot.get();
  }

  const detail::FieldData* quadratic(const mpz_class& d) {
    std::lock_guard lock(mu_);
    auto& slot = quads_[d.get_str()];
    if (!slot) slot = std::make_unique<detail::FieldData>(detail::FieldData{FieldKind::QuadExt, 0, d});
    return slot.get();
  }

 private:
  detail::FieldData rationals_{FieldKind::Rationals, 0, 0};
  std::mutex mu_;
  std::map<std::int64_t, std::unique_ptr<detail::FieldData>> primes_;
  std::map<std::string, std::unique_ptr<detail::FieldData>> quads_;
};

mpz_class mod_floor(const mpz_class& a, std::int64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p));
  return r;
}

// Squarefree part of a positive integer by trial division. Cofactors left
// after the trial bound are treated as squarefree unless they are perfect
// squares; the field is still correct in that case, only not minimal.
std::pair<mpz_class, mpz_class> squarefree_split(mpz_class n) {
  mpz_class free = 1, root = 1;
  constexpr unsigned long kTrialBound = 1000000;
  for (unsigned long f = 2; f <= kTrialBound; ++f) {
    if (mpz_cmp_ui(n.get_mpz_t(), 1) == 0) break;
    mpz_class f2 = mpz_class(f) * f;
    if (f2 > n) {
      break;
    }
    int exp = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), f)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), f);
      ++exp;
    }
    for (int i = 0; i + 1 < exp; i += 2) root *= f;
    if (exp % 2 == 1) free *= f;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      root *= s;
    } else {
      free *= n;
    }
  }
  return {free, root};
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

Field::Field() : data_(FieldRegistry::instance().rationals()) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::int64_t p) {
  if (p == 2) throw Error(ErrorKind::InvalidField, "characteristic 2 is not supported");
  if (!liebreadth::is_prime(p)) throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not an odd prime");
  if (p > (std::int64_t{1} << 31)) throw Error(ErrorKind::InvalidField, "prime too large");
  return Field(FieldRegistry::instance().prime(p));
}

std::pair<mpz_class, mpq_class> squarefree_decomposition(const mpq_class& value) {
  if (sgn(value) == 0) throw Error(ErrorKind::BadParameter, "squarefree part of zero");
  // value = num/den = num*den / den^2
  mpz_class prod = value.get_num() * value.get_den();
  int sign = sgn(prod);
  auto [free, root] = squarefree_split(abs(prod));
  mpq_class s(root, value.get_den());
  s.canonicalize();
  return {sign < 0 ? mpz_class(-free) : free, s};
}

Field Field::quadratic(const mpq_class& d) {
  if (sgn(d) == 0) throw Error(ErrorKind::InvalidField, "quadratic extension with d = 0");
  auto [d0, s] = squarefree_decomposition(d);
  if (d0 == 1) throw Error(ErrorKind::InvalidField, d.get_str() + " is a rational square");
  return Field(FieldRegistry::instance().quadratic(d0));
}

FieldKind Field::kind() const { return data_->kind; }

std::int64_t Field::modulus() const {
  if (!is_prime()) throw Error(ErrorKind::FieldMismatch, "modulus of a non-prime field");
  return data_->p;
}

const mpz_class& Field::radicand() const {
  if (!is_quadratic()) throw Error(ErrorKind::FieldMismatch, "radicand of a non-quadratic field");
  return data_->d;
}

std::string Field::to_string() const {
  switch (kind()) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "GF(" + std::to_string(data_->p) + ")";
    case FieldKind::QuadExt: return "Q(sqrt(" + data_->d.get_str() + "))";
  }
  return "?";
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field), a_(value) {
  normalize();
}

Scalar::Scalar(Field field, const mpq_class& a, const mpq_class& b) : field_(field), a_(a), b_(b) {
  if (!field.is_quadratic() && sgn(b) != 0)
    throw Error(ErrorKind::FieldMismatch, "irrational part outside a quadratic extension");
  normalize();
}

void Scalar::normalize() {
  if (field_.is_prime()) {
    const std::int64_t p = field_.modulus();
    if (mpz_divisible_ui_p(a_.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
      throw Error(ErrorKind::BadPrime, "denominator of " + a_.get_str() + " divisible by " + std::to_string(p));
    mpz_class num = mod_floor(a_.get_num(), p);
    if (a_.get_den() != 1) {
      mpz_class inv;
      mpz_class den = mod_floor(a_.get_den(), p);
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
      num = mod_floor(num * inv, p);
    }
    a_ = num;
    b_ = 0;
  } else {
    a_.canonicalize();
    b_.canonicalize();
  }
}

bool Scalar::is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
bool Scalar::is_one() const { return a_ == 1 && sgn(b_) == 0; }

std::int64_t Scalar::residue() const {
  if (!field_.is_prime()) throw Error(ErrorKind::FieldMismatch, "residue of a non-prime-field scalar");
  return a_.get_num().get_si();
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime()) {
    if (sgn(r.a_) != 0) r.a_ = mpq_class(field_.modulus()) - r.a_;
  } else {
    r.a_ = -r.a_;
    r.b_ = -r.b_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (field_.is_prime()) {
    mpz_class s = a_.get_num() + o.a_.get_num();
    if (s >= field_.modulus()) s -= field_.modulus();
    a_ = s;
  } else {
    a_ += o.a_;
    b_ += o.b_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (field_.is_prime()) {
    mpz_class s = a_.get_num() - o.a_.get_num();
    if (s < 0) s += field_.modulus();
    a_ = s;
  } else {
    a_ -= o.a_;
    b_ -= o.b_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  switch (field_.kind()) {
    case FieldKind::PrimeField:
      a_ = mod_floor(a_.get_num() * o.a_.get_num(), field_.modulus());
      break;
    case FieldKind::Rationals:
      a_ *= o.a_;
      break;
    case FieldKind::QuadExt: {
      mpq_class d(field_.radicand());
      mpq_class a = a_ * o.a_ + d * b_ * o.b_;
      mpq_class b = a_ * o.b_ + b_ * o.a_;
      a_ = a;
      b_ = b;
      break;
    }
  }
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  switch (field_.kind()) {
    case FieldKind::PrimeField: {
      mpz_class r;
      mpz_invert(r.get_mpz_t(), a_.get_num().get_mpz_t(), mpz_class(field_.modulus()).get_mpz_t());
      return Scalar(field_, mpq_class(r));
    }
    case FieldKind::Rationals:
      return Scalar(field_, mpq_class(1) / a_);
    case FieldKind::QuadExt: {
      // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - d b^2)
      mpq_class norm = a_ * a_ - mpq_class(field_.radicand()) * b_ * b_;
      return Scalar(field_, a_ / norm, -b_ / norm);
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.a_ == b.a_ && a.b_ == b.b_;
}

std::strong_ordering canonical_order(const Scalar& a, const Scalar& b) {
  int c = cmp(a.a_, b.a_);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  c = cmp(a.b_, b.b_);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (!field_.is_quadratic()) return a_.get_str();
  if (sgn(b_) == 0) return a_.get_str();
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  return s + b_.get_str() + "*sqrt(" + field_.radicand().get_str() + ")";
}

Scalar embed(const Scalar& s, Field target) {
  if (s.field() == target) return s;
  if (s.field().is_rationals() || (s.field().char_zero() && s.is_rational())) {
    if (target.is_prime()) return Scalar(target, s.rational_part());
    return Scalar(target, s.rational_part());
  }
  throw Error(ErrorKind::FieldMismatch, "cannot embed " + s.to_string() + " of " + s.field().to_string() + " into " +
                                            target.to_string());
}

bool same_value(const Scalar& a, const Scalar& b) {
  if (a.field() == b.field()) return a == b;
  if (!a.field().char_zero() || !b.field().char_zero()) return false;
  return a.is_rational() && b.is_rational() && a.rational_part() == b.rational_part();
}

namespace {

bool rational_sqrt(const mpq_class& q, mpq_class& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t())) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
  root = mpq_class(n, d);
  root.canonicalize();
  return true;
}

}  // namespace

std::pair<Scalar, Field> sqrt_or_extend(const Scalar& c) {
  if (c.is_zero()) throw Error(ErrorKind::BadParameter, "sqrt_or_extend of zero");
  if (c.field().is_prime()) throw Error(ErrorKind::UnsupportedField, "sqrt_or_extend over a prime field");
  if (c.field().is_quadratic()) {
    Scalar root;
    if (try_sqrt_in_field(c, root)) return {root, c.field()};
    throw Error(ErrorKind::AlreadyExtended, "square root of " + c.to_string() + " needs a second extension");
  }
  mpq_class r;
  if (rational_sqrt(c.rational_part(), r)) return {Scalar(c.field(), r), c.field()};
  auto [d0, s] = squarefree_decomposition(c.rational_part());
  Field ext = Field::quadratic(mpq_class(d0));
  // c = d0 * s^2, so sqrt(c) = |s| sqrt(d0)
  return {Scalar(ext, 0, abs(s)), ext};
}

bool try_sqrt_in_field(const Scalar& c, Scalar& root) {
  const Field f = c.field();
  if (c.is_zero()) {
    root = Scalar::zero(f);
    return true;
  }
  switch (f.kind()) {
    case FieldKind::PrimeField: {
      const std::int64_t p = f.modulus();
      const std::int64_t r = c.residue();
      for (std::int64_t x = 1; x < p; ++x)
        if ((x * x) % p == r) {
          root = Scalar(f, x);
          return true;
        }
      return false;
    }
    case FieldKind::Rationals: {
      mpq_class r;
      if (!rational_sqrt(c.rational_part(), r)) return false;
      root = Scalar(f, r);
      return true;
    }
    case FieldKind::QuadExt: {
      // (x + y sqrt d)^2 = x^2 + d y^2 + 2xy sqrt d
      const mpq_class d(f.radicand());
      const mpq_class& a = c.rational_part();
      const mpq_class& b = c.irrational_part();
      mpq_class x, y;
      if (sgn(b) == 0) {
        if (rational_sqrt(a, x)) {
          root = Scalar(f, x);
          return true;
        }
        if (rational_sqrt(mpq_class(a / d), y)) {
          root = Scalar(f, 0, y);
          return true;
        }
        return false;
      }
      mpq_class norm_root;
      if (!rational_sqrt(mpq_class(a * a - d * b * b), norm_root)) return false;
      for (int sign : {1, -1}) {
        mpq_class x2 = (a + sign * norm_root) / 2;
        if (sgn(x2) > 0 && rational_sqrt(x2, x)) {
          y = b / (2 * x);
          root = Scalar(f, x, y);
          return true;
        }
      }
      return false;
    }
  }
  return false;
}

}  // namespace liebreadth
