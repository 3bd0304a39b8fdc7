#include "liebreadth/cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liebreadth/breadth.hpp"
#include "liebreadth/catalog.hpp"
#include "liebreadth/generators.hpp"
#include "liebreadth/invariants.hpp"
#include "liebreadth/json_io.hpp"
#include "liebreadth/recognizer.hpp"

namespace liebreadth {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

StructureTensor read_algebra(const std::string& path, Io& io) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << io.in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, path + ": cannot open");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return algebra_from_json(parse_json(text, path == "-" ? "<stdin>" : path));
}

Json violations_json(const ValidationReport& r) {
  Json list = Json::array();
  for (const auto& v : r.violations) {
    Json value = Json::array();
    for (const auto& s : v.value) value.push_back(to_json(s));
    list.push_back(Json{{"triple", {v.i + 1, v.j + 1, v.k + 1}}, {"value", value}});
  }
  return list;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Json dims(const std::vector<Subspace>& series) {
  Json out = Json::array();
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

// Jacobi gate shared by the structural subcommands.
bool require_lie(const StructureTensor& L, Io& io) {
  const auto report = validate(L);
  if (report.ok()) return true;
  io.out << dump(Json{{"ok", false}, {"violations", violations_json(report)}});
  io.err << "input violates the Jacobi identity\n";
  return false;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Breadth and classification of Lie algebras given by structure constants", "liebreadth"};
  app.require_subcommand(1);

  std::string input, input2;
  std::uint64_t seed = 0;
  std::size_t trials = 24;
  std::int64_t entry_bound = std::int64_t{1} << 31;
  std::string method = "auto";
  std::string tag_text, gamma_text, check = "breadth1", kind = "solvable";
  std::int64_t p = 0;
  std::int64_t enum_p = 3;
  std::size_t n = 3, m = 1, k = 2;
  std::int64_t bound = 3;
  unsigned jobs = 1;

  auto* validate_cmd = app.add_subcommand("validate", "check antisymmetry-stored tensor against Jacobi");
  validate_cmd->add_option("algebra", input, "algebra JSON file or -")->required();

  auto* invariants_cmd = app.add_subcommand("invariants", "series dimensions, center, purity, solvability");
  invariants_cmd->add_option("algebra", input, "algebra JSON file or -")->required();

  auto* breadth_cmd = app.add_subcommand("breadth", "b(L) with a witness");
  breadth_cmd->add_option("algebra", input, "algebra JSON file or -")->required();
  breadth_cmd->add_option("--trials", trials, "random evaluations over Q")->check(CLI::PositiveNumber);
  breadth_cmd->add_option("--entry-bound", entry_bound, "random entries lie in [-bound, bound]")
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max() / 4));
  breadth_cmd->add_option("--seed", seed, "random seed");
  breadth_cmd->add_option("--method", method, "auto, symbolic or montecarlo")
      ->check(CLI::IsMember({"auto", "symbolic", "montecarlo"}));

  auto* classify_cmd = app.add_subcommand("classify", "canonical family with a verified witness");
  classify_cmd->add_option("algebra", input, "algebra JSON file or -")->required();

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test between two classified algebras");
  iso_cmd->add_option("first", input, "algebra JSON file or -")->required();
  iso_cmd->add_option("second", input2, "algebra JSON file or -")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "list families or emit one as JSON");
  catalog_cmd->add_option("--tag", tag_text, "e.g. L1, L2(4), HeisenbergCentral(2,1), L8");
  catalog_cmd->add_option("--gamma", gamma_text, "parameter for L8, e.g. 1/3");
  catalog_cmd->add_option("--p", p, "build over GF(p) instead of Q");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "exhaustive scan of GF(p) tensors");
  enumerate_cmd->add_option("--p", enum_p, "odd prime");
  enumerate_cmd->add_option("--n", n, "dimension");
  enumerate_cmd->add_option("--check", check, "breadth1, breadth2 or none")
      ->check(CLI::IsMember({"breadth1", "breadth2", "none"}));
  enumerate_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto* random_cmd = app.add_subcommand("random", "emit a random algebra");
  random_cmd->add_option("--kind", kind, "solvable or nilpotent")->check(CLI::IsMember({"solvable", "nilpotent"}));
  random_cmd->add_option("--seed", seed, "random seed");
  random_cmd->add_option("--m", m, "dimension of the acting part (solvable)")->check(CLI::PositiveNumber);
  random_cmd->add_option("--k", k, "dimension of the module (solvable)")->check(CLI::PositiveNumber);
  random_cmd->add_option("--bound", bound, "entry bound")->check(CLI::PositiveNumber);
  random_cmd->add_option("--p", p, "work over GF(p) instead of Q");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      const auto L = read_algebra(input, io);
      const auto report = validate(L);
      out << dump(Json{{"ok", report.ok()}, {"violations", violations_json(report)}});
      return report.ok() ? kOk : kFailed;
    }
    if (invariants_cmd->parsed()) {
      const auto L = read_algebra(input, io);
      if (!require_lie(L, io)) return kFailed;
      const auto ds = derived_series(L);
      const auto lcs = lower_central_series(L);
      out << dump(Json{{"dim", L.dim()},
                       {"dim_center", center(L).dim()},
                       {"derived_series", dims(ds)},
                       {"lower_central_series", dims(lcs)},
                       {"solvable", ds.back().is_zero()},
                       {"nilpotent", lcs.back().is_zero()},
                       {"pure", is_pure(L)}});
      return kOk;
    }
    if (breadth_cmd->parsed()) {
      const auto L = read_algebra(input, io);
      BreadthOptions opts;
      opts.trials = trials;
      opts.entry_bound = entry_bound;
      opts.seed = seed;
      opts.method = method == "symbolic"     ? BreadthOptions::Method::Symbolic
                    : method == "montecarlo" ? BreadthOptions::Method::MonteCarlo
                                             : BreadthOptions::Method::Auto;
      const auto r = breadth(L, opts);
      Json j{{"value", r.value}, {"certainty", to_string(r.certainty)}, {"witness", vector_json(r.witness)}};
      if (r.certainty == Certainty::MonteCarlo) {
        j["trials"] = r.trials;
        j["entry_bound"] = r.entry_bound;
      }
      out << dump(j);
      return kOk;
    }
    if (classify_cmd->parsed()) {
      const auto r = classify(read_algebra(input, io));
      Json orbit = nullptr;
      if (r.parameter_orbit) orbit = Json::array({to_json(r.parameter_orbit->first), to_json(r.parameter_orbit->second)});
      out << dump(Json{{"family", r.family.to_string()},
                       {"parameter_orbit", orbit},
                       {"witness", to_json(r.witness)},
                       {"field_used", to_json(r.field_used)},
                       {"verified", r.verified}});
      return r.verified ? kOk : kFailed;
    }
    if (iso_cmd->parsed()) {
      const auto a = read_algebra(input, io);
      const auto b = read_algebra(input2, io);
      const auto r = are_isomorphic(a, b);
      Json j{{"isomorphic", r.isomorphic}};
      if (r.witness) j["witness"] = to_json(*r.witness);
      out << dump(j);
      return kOk;
    }
    if (catalog_cmd->parsed()) {
      if (tag_text.empty()) {
        Json tags = Json::array({"Abelian(n)", "HeisenbergCentral(k,m)", "Breadth1Solvable(n)", "L1", "L2(n)", "L3(n)",
                                 "L4", "L5", "L6", "L7", "L8(gamma)"});
        Json samples = Json::array();
        for (const auto& t : catalog_samples()) samples.push_back(t.to_string());
        out << dump(Json{{"families", tags}, {"samples", samples}});
        return kOk;
      }
      const FamilyTag tag =
          parse_tag(tag_text, gamma_text.empty() ? std::nullopt : std::optional<std::string>(gamma_text));
      out << dump(to_json(build(tag, p ? Field::prime(p) : Field::rationals())));
      return kOk;
    }
    if (enumerate_cmd->parsed()) {
      std::atomic<std::uint64_t> checked{0}, failures{0}, skipped{0};
      const bool b1 = check == "breadth1", b2 = check == "breadth2";
      const auto stats = enumerate_gfp(
          enum_p, n,
          [&](const StructureTensor& L, std::size_t b) {
            const std::size_t dd = derived_algebra(L).dim();
            if (b1) {
              ++checked;
              if ((b == 1) != (dd == 1)) ++failures;
            } else if (b2) {
              if (!is_solvable(L)) {
                ++skipped;
                return;
              }
              ++checked;
              const bool s2 = dd == 3 && L.dim() - center(L).dim() == 3;
              if ((b == 2) != (dd == 2 || s2)) ++failures;
            }
          },
          jobs);
      Json hist = Json::object();
      for (const auto& [b, c] : stats.breadth_histogram) hist[std::to_string(b)] = c;
      Json j{{"p", enum_p},       {"n", n}, {"total", stats.total}, {"jacobi_ok", stats.jacobi_ok}, {"breadth_histogram", hist},
             {"check", check}};
      if (b1 || b2) {
        j["checked"] = checked.load();
        j["failures"] = failures.load();
        if (b2) j["skipped_nonsolvable"] = skipped.load();
      }
      out << dump(j);
      return failures == 0 ? kOk : kFailed;
    }
    if (random_cmd->parsed()) {
      const Field f = p ? Field::prime(p) : Field::rationals();
      const auto L = kind == "solvable" ? random_solvable(m, k, f, bound, seed) : random_nilpotent(seed, f);
      out << dump(to_json(L));
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::BadParameter || e.kind() == ErrorKind::BadPrime ? kUsage : kFailed;
  }
  return kUsage;
}

}  // namespace liebreadth
