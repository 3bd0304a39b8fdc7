#include "liebreadth/catalog.hpp"

#include <regex>

namespace liebreadth {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParameter, what);
}

void check_parameters(const FamilyTag& t) {
  switch (t.family) {
    case Family::HeisenbergCentral:
      require(t.k >= 1 && t.m >= 1, "HeisenbergCentral needs k >= 1 and m >= 1");
      break;
    case Family::Breadth1Solvable:
      require(t.n >= 2, "Breadth1Solvable needs n >= 2");
      break;
    case Family::L2:
      require(t.n >= 2 && t.n % 2 == 0, "L2(n) needs n even and n >= 2");
      break;
    case Family::L3:
      require(t.n >= 1 && t.n % 2 == 1, "L3(n) needs n odd and n >= 1");
      break;
    case Family::L8:
      require(t.gamma.has_value(), "L8 needs a parameter");
      require(!t.gamma->is_zero(), "L8 parameter must be nonzero");
      break;
    default:
      break;
  }
}

Scalar gamma_in(const Scalar& g, Field field) {
  if (g.field() == field) return g;
  if (g.is_rational()) {
    if (field.is_prime()) {
      const mpq_class& q = g.rational_part();
      if (mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(field.modulus())))
        throw Error(ErrorKind::BadParameter, "parameter " + g.to_string() + " is undefined in " + field.to_string());
      return Scalar(field, q);
    }
    return embed(g, field);
  }
  throw Error(ErrorKind::BadParameter, "parameter " + g.to_string() + " does not lie in " + field.to_string());
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Abelian: return "Abelian";
    case Family::HeisenbergCentral: return "HeisenbergCentral";
    case Family::Breadth1Solvable: return "Breadth1Solvable";
    case Family::L1: return "L1";
    case Family::L2: return "L2";
    case Family::L3: return "L3";
    case Family::L4: return "L4";
    case Family::L5: return "L5";
    case Family::L6: return "L6";
    case Family::L7: return "L7";
    case Family::L8: return "L8";
  }
  return "?";
}

std::string FamilyTag::to_string() const {
  const std::string name = family_name(family);
  switch (family) {
    case Family::Abelian:
    case Family::Breadth1Solvable:
    case Family::L2:
    case Family::L3:
      return name + "(" + std::to_string(n) + ")";
    case Family::HeisenbergCentral:
      return name + "(" + std::to_string(k) + "," + std::to_string(m) + ")";
    case Family::L8:
      return name + "(" + (gamma ? gamma->to_string() : std::string("?")) + ")";
    default:
      return name;
  }
}

bool operator==(const FamilyTag& a, const FamilyTag& b) {
  if (a.family != b.family || a.n != b.n || a.k != b.k || a.m != b.m) return false;
  if (a.gamma.has_value() != b.gamma.has_value()) return false;
  return !a.gamma || same_value(*a.gamma, *b.gamma);
}

FamilyTag parse_tag(const std::string& text, const std::optional<std::string>& gamma) {
  static const std::regex shape(R"(\s*([A-Za-z0-9]+)\s*(?:\(\s*([^)]*)\))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) throw Error(ErrorKind::BadParameter, "unrecognised tag '" + text + "'");
  const std::string name = m[1];
  const std::string args = m[2];
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char c : args) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty()) parts.push_back(cur);
  }
  auto count = [&](std::size_t i) -> std::size_t {
    if (i >= parts.size()) throw Error(ErrorKind::BadParameter, "tag '" + text + "' is missing a parameter");
    try {
      std::size_t used = 0;
      const long v = std::stol(parts[i], &used);
      if (used != parts[i].size() || v < 0) throw std::invalid_argument("");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParameter, "bad integer '" + parts[i] + "' in tag");
    }
  };
  auto arity = [&](std::size_t want) {
    if (parts.size() != want) throw Error(ErrorKind::BadParameter, "tag '" + text + "' has the wrong number of parameters");
  };
  FamilyTag tag;
  if (name == "Abelian") {
    arity(1);
    tag = FamilyTag::abelian(count(0));
  } else if (name == "HeisenbergCentral") {
    arity(2);
    tag = FamilyTag::heisenberg(count(0), count(1));
  } else if (name == "Breadth1Solvable") {
    arity(1);
    tag = FamilyTag::breadth1_solvable(count(0));
  } else if (name == "L2" || name == "L3") {
    arity(1);
    tag = name == "L2" ? FamilyTag::l2(count(0)) : FamilyTag::l3(count(0));
  } else if (name == "L8") {
    std::string g;
    if (parts.size() == 1)
      g = parts[0];
    else if (parts.empty() && gamma)
      g = *gamma;
    else
      throw Error(ErrorKind::BadParameter, "L8 needs exactly one parameter");
    mpq_class q;
    if (q.set_str(g, 10) != 0) throw Error(ErrorKind::BadParameter, "bad rational '" + g + "'");
    q.canonicalize();
    tag = FamilyTag::l8(Scalar(Field::rationals(), q));
  } else {
    static const std::pair<const char*, Family> plain[] = {{"L1", Family::L1}, {"L4", Family::L4}, {"L5", Family::L5},
                                                           {"L6", Family::L6}, {"L7", Family::L7}};
    bool found = false;
    for (const auto& [label, fam] : plain)
      if (name == label) {
        arity(0);
        tag = FamilyTag::simple(fam);
        found = true;
      }
    if (!found) throw Error(ErrorKind::BadParameter, "unknown family '" + name + "'");
  }
  check_parameters(tag);
  return tag;
}

StructureTensor build(const FamilyTag& tag, Field field) {
  check_parameters(tag);
  auto set = [&](StructureTensor& L, std::size_t i, std::size_t j, std::vector<std::pair<std::size_t, Scalar>> terms) {
    Vector v = zero_vector(field, L.dim());
    for (auto& [k, c] : terms) v[k] = c;
    L.set_bracket(i, j, v);
  };
  const Scalar one = Scalar::one(field);
  switch (tag.family) {
    case Family::Abelian:
      return StructureTensor(field, tag.n);
    case Family::HeisenbergCentral: {
      // x_i = 2i, y_i = 2i + 1, z_1 = 2k
      StructureTensor L(field, 2 * tag.k + tag.m);
      for (std::size_t i = 0; i < tag.k; ++i) set(L, 2 * i, 2 * i + 1, {{2 * tag.k, one}});
      return L;
    }
    case Family::Breadth1Solvable: {
      StructureTensor L(field, tag.n);
      set(L, 0, 1, {{0, one}});
      return L;
    }
    case Family::L1: {
      StructureTensor L(field, 4);
      set(L, 0, 1, {{1, one}});
      set(L, 0, 2, {{2, -one}});
      set(L, 1, 2, {{3, one}});
      return L;
    }
    case Family::L2:
    case Family::L3: {
      // x1 = 0, x2 = 1, z_i = i + 1, z = n + 2
      const std::size_t n = tag.n;
      const std::size_t z = n + 2;
      StructureTensor L(field, n + 3);
      set(L, 0, 1, {{0, one}});
      std::size_t first = 1;
      if (tag.family == Family::L3) {
        set(L, 1, 2, {{z, one}});
        first = 2;
      }
      for (std::size_t i = first; i + 1 <= n; i += 2) set(L, i + 1, i + 2, {{z, one}});
      return L;
    }
    case Family::L4: {
      StructureTensor L(field, 5);
      set(L, 0, 4, {{3, one}});
      set(L, 1, 3, {{3, one}});
      set(L, 2, 4, {{4, one}});
      return L;
    }
    case Family::L5: {
      StructureTensor L(field, 4);
      set(L, 0, 1, {{1, one}});
      set(L, 2, 3, {{3, one}});
      return L;
    }
    case Family::L6: {
      StructureTensor L(field, 4);
      set(L, 0, 3, {{2, one}});
      set(L, 1, 2, {{2, one}});
      set(L, 1, 3, {{3, one}});
      return L;
    }
    case Family::L7: {
      StructureTensor L(field, 3);
      set(L, 0, 1, {{1, one}});
      set(L, 0, 2, {{1, one}, {2, one}});
      return L;
    }
    case Family::L8: {
      const Scalar g = gamma_in(*tag.gamma, field);
      if (g.is_zero()) throw Error(ErrorKind::BadParameter, "L8 parameter vanishes in " + field.to_string());
      StructureTensor L(field, 3);
      set(L, 0, 1, {{1, one}});
      set(L, 0, 2, {{2, g}});
      return L;
    }
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

ExpectedInvariants expected_invariants(const FamilyTag& tag) {
  check_parameters(tag);
  switch (tag.family) {
    case Family::Abelian:
      return {tag.n, 0, tag.n, 0, true, true, tag.n == 0, 0};
    case Family::HeisenbergCentral:
      return {2 * tag.k + tag.m, 1, tag.m, 1, true, true, tag.m == 1, 0};
    case Family::Breadth1Solvable:
      return {tag.n, 1, tag.n - 2, 1, true, false, tag.n == 2, 1};
    case Family::L1:
      // [L, [L, L]] already contains [x2, x3] = z, so L^k has dim 3 throughout
      return {4, 3, 1, 2, true, false, true, 3};
    case Family::L2:
    case Family::L3:
      return {tag.n + 3, 2, 1, 2, true, false, true, 1};
    case Family::L4:
      return {5, 2, 0, 2, true, false, true, 2};
    case Family::L5:
    case Family::L6:
      return {4, 2, 0, 2, true, false, true, 2};
    case Family::L7:
    case Family::L8:
      return {3, 2, 0, 2, true, false, true, 2};
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

std::vector<FamilyTag> catalog_samples() {
  const Field Q = Field::rationals();
  return {FamilyTag::heisenberg(1, 1),
          FamilyTag::heisenberg(2, 1),
          FamilyTag::breadth1_solvable(2),
          FamilyTag::simple(Family::L1),
          FamilyTag::l2(2),
          FamilyTag::l2(4),
          FamilyTag::l3(1),
          FamilyTag::l3(3),
          FamilyTag::simple(Family::L4),
          FamilyTag::simple(Family::L5),
          FamilyTag::simple(Family::L6),
          FamilyTag::simple(Family::L7),
          FamilyTag::l8(Scalar(Q, 2L)),
          FamilyTag::l8(Scalar(Q, -1L)),
          FamilyTag::l8(Scalar(Q, mpq_class(1, 3)))};
}

}  // namespace liebreadth
