#include "liebreadth/json_io.hpp"

namespace liebreadth {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::string rational_text(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from(const Json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) bad("expected a rational as a string, got " + j.dump());
  mpq_class q;
  const std::string s = j.get<std::string>();
  if (s.empty() || q.set_str(s, 10) != 0) bad("malformed rational '" + s + "'");
  if (q.get_den() == 0) bad("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Scalar& s) {
  if (s.field().is_quadratic())
    return Json{{"a", rational_text(s.rational_part())},
                {"b", rational_text(s.irrational_part())},
                {"d", s.field().radicand().get_str()}};
  if (s.field().is_prime()) return std::to_string(s.residue());
  return rational_text(s.rational_part());
}

Json to_json(Field f) {
  switch (f.kind()) {
    case FieldKind::Rationals: return Json{{"kind", "rationals"}};
    case FieldKind::PrimeField: return Json{{"kind", "prime"}, {"p", f.modulus()}};
    case FieldKind::QuadExt: return Json{{"kind", "quadratic"}, {"d", f.radicand().get_str()}};
  }
  return {};
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const StructureTensor& L) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector& v = L.stored_pair(i, j);
      if (is_zero_vector(v)) continue;
      Json coeffs = Json::array();
      for (const auto& s : v) coeffs.push_back(to_json(s));
      brackets.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  return Json{{"dim", L.dim()}, {"field", to_json(L.field())}, {"brackets", brackets}};
}

Field field_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) bad("field kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "rationals") return Field::rationals();
  if (k == "prime") {
    const Json& p = member(j, "p");
    if (!p.is_number_integer()) bad("field p must be an integer");
    return Field::prime(p.get<std::int64_t>());
  }
  if (k == "quadratic") return Field::quadratic(rational_from(member(j, "d")));
  bad("unknown field kind '" + k + "'");
}

Scalar scalar_from_json(const Json& j, Field f) {
  if (f.is_quadratic()) {
    if (j.is_object()) {
      const Field g = Field::quadratic(rational_from(member(j, "d")));
      if (!(g == f)) bad("scalar radicand does not match the field");
      return Scalar(f, rational_from(member(j, "a")), rational_from(member(j, "b")));
    }
    return Scalar(f, rational_from(j));
  }
  if (f.is_prime()) {
    const mpq_class q = rational_from(j);
    if (q.get_den() != 1) bad("GF(p) entries must be integers");
    mpz_class r = q.get_num() % f.modulus();
    if (r < 0) r += f.modulus();
    return Scalar(f, mpq_class(r));
  }
  return Scalar(f, rational_from(j));
}

StructureTensor algebra_from_json(const Json& j) {
  const Json& dim = member(j, "dim");
  if (!dim.is_number_unsigned() && !(dim.is_number_integer() && dim.get<long>() >= 0))
    bad("dim must be a nonnegative integer");
  const auto n = dim.get<std::size_t>();
  const Field f = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
  StructureTensor L(f, n);
  if (!j.contains("brackets")) return L;
  const Json& brackets = j.at("brackets");
  if (!brackets.is_array()) bad("brackets must be a list");
  for (const auto& b : brackets) {
    const Json& bi = member(b, "i");
    const Json& bj = member(b, "j");
    if (!bi.is_number_integer() || !bj.is_number_integer()) bad("bracket indices must be integers");
    const long i = bi.get<long>(), k = bj.get<long>();
    if (i < 1 || k < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(k) > n || i >= k)
      bad("bracket indices need 1 <= i < j <= dim, got (" + std::to_string(i) + ", " + std::to_string(k) + ")");
    const Json& coeffs = member(b, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != n) bad("coeffs must list dim scalars");
    Vector v;
    for (const auto& c : coeffs) v.push_back(scalar_from_json(c, f));
    L.set_bracket(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1), v);
  }
  return L;
}

Scalar parse_rational(const std::string& text, Field f) {
  try {
    return scalar_from_json(Json(text), f);
  } catch (const Error& e) {
    throw Error(ErrorKind::BadParameter, std::string(e.what()).substr(std::string("ParseError: ").size()));
  }
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line and column, both 1-based
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    bad(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace liebreadth
