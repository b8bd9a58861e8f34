#include "cli.hpp"

#include "toricg/config.hpp"
#include "toricg/nestohedra.hpp"
#include "toricg/parking.hpp"
#include "toricg/polyvec.hpp"
#include "toricg/verify.hpp"
#include "toricg/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <climits>
#include <limits>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

namespace toricg::cli {

namespace {

/// Raised for disagreeing routes in `table --route all`.
class RouteMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Source {
  // Exactly one of these is set.
  std::optional<Family> polytope;
  std::optional<NamedFamily> named;
  std::optional<BuildingSet> file;
  std::string label;
};

BuildingSet read_building_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open building set file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  BuildingSet bs = BuildingSet::from_json(ss.str());
  validate(bs);
  return bs;
}

Source resolve_source(const std::string& family, const std::string& path) {
  if (!family.empty() && !path.empty()) throw PreconditionError("give either --family or --building-set, not both");
  Source s;
  if (!path.empty()) {
    s.file = read_building_set(path);
    s.label = "building-set:" + path;
    return s;
  }
  if (family.empty()) throw PreconditionError("one of --family or --building-set is required");
  try {
    s.polytope = parse_family(family);
  } catch (const ParseError&) {
    s.named = NamedFamily::parse(family);
  }
  s.label = "family:" + family;
  return s;
}

void check_cap(int n, int cap, const std::string& what) {
  if (n > cap) throw CapacityError(what + " is bounded by n <= " + std::to_string(cap) + " (requested " + std::to_string(n) + "); use --unsafe-max to override");
}

IntPoly ascent_poly_123_functions(int n) {
  IntVec c(n + 1, 0);
  for_each_123_avoiding_function(n, [&](const FiniteFunction& f) { c[fn_ascents(f)] += 1; });
  return IntPoly(c);
}

NamedFamily building_set_of(Family f) {
  switch (f) {
    case Family::cube: return {NamedFamily::Kind::stanley_pitman};
    case Family::associahedron: return {NamedFamily::Kind::associahedron_intervals};
    case Family::permutahedron: return {NamedFamily::Kind::permutahedron};
    case Family::cyclohedron: break;
  }
  throw PreconditionError("the cyclohedron is not a chordal nestohedron");
}

IntPoly compute_route(const Source& s, int n, const std::string& route, const CapacityLimits& caps) {
  if (s.polytope) {
    Family f = *s.polytope;
    if (route == "gamma") return toric_g_from_gamma(n, gamma_family(f, n));
    if (route == "hvector") return toric_g_from_h(h_family(f, n));
    check_cap(n, caps.direct, "the direct route");
    if (f == Family::cyclohedron) return ascent_poly_123_functions(n);
    return toric_g_direct(named_family(building_set_of(f), n), caps.direct);
  }
  BuildingSet bs = s.file ? *s.file : named_family(*s.named, n);
  if (route == "gamma") return toric_g_chordal(bs, caps.b_permutations);
  if (route == "hvector") return toric_g_from_h(h_chordal(bs, caps.b_permutations));
  return toric_g_direct(bs, caps.direct);
}

nlohmann::ordered_json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

struct Row {
  int n;
  IntPoly g;
};

int cmd_table(const std::string& family, const std::string& path, int max_n, const std::string& route,
              const std::string& format, bool unsafe, std::ostream& out) {
  CapacityLimits caps = kDefaultLimits;
  if (unsafe) caps = {INT_MAX, INT_MAX, INT_MAX, INT_MAX, INT_MAX, INT_MAX};
  Source src = resolve_source(family, path);

  std::vector<int> dims;
  if (src.file) {
    dims.push_back(src.file->ground_size() - 1);
    if (dims[0] < 1) throw PreconditionError("building set needs a ground set of size at least 2");
  } else {
    if (max_n < 1) throw PreconditionError("--max must be at least 1");
    int first = src.named && src.named->kind == NamedFamily::Kind::interpolation ? src.named->r : 1;
    for (int n = std::max(first, 1); n <= max_n; ++n) dims.push_back(n);
  }
  int top = dims.empty() ? 0 : dims.back();

  int cap = src.polytope ? caps.table : caps.b_permutations;
  if (route == "direct") cap = caps.direct;
  check_cap(top, cap, "route '" + route + "'");

  std::vector<Row> rows;
  for (int n : dims) {
    if (route != "all") {
      rows.push_back({n, compute_route(src, n, route, caps)});
      continue;
    }
    IntPoly g = compute_route(src, n, "gamma", caps);
    std::vector<std::string> others{"hvector"};
    if (n <= caps.direct) others.push_back("direct");
    for (const auto& r : others) {
      IntPoly o = compute_route(src, n, r, caps);
      if (!(o == g))
        throw RouteMismatch("route disagreement at n=" + std::to_string(n) + ": gamma=" + g.str() + " " + r + "=" + o.str());
    }
    rows.push_back({n, g});
  }

  int cols = top / 2 + 1;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = "toricg/1";
    j["source"] = src.label;
    j["route"] = route;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json g = nlohmann::ordered_json::array();
      for (int k = 0; k <= r.n / 2; ++k) g.push_back(big_json(r.g.coeff(k)));
      j["rows"].push_back({{"n", r.n}, {"g", g}});
    }
    out << j.dump() << '\n';
    return kOk;
  }
  out << "n";
  for (int k = 0; k < cols; ++k) out << ",g" << k;
  out << '\n';
  for (const auto& r : rows) {
    out << r.n;
    for (int k = 0; k < cols; ++k) {
      out << ',';
      if (k <= r.n / 2) out << r.g.coeff(k);
    }
    out << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& suite, int n_max, bool unsafe, std::ostream& out) {
  if (!unsafe) check_cap(n_max, kDefaultLimits.table, "verification");
  SuiteReport r = run_suite(suite, n_max);
  out << r.to_json() << '\n';
  return r.ok() ? kOk : kVerifyFailed;
}

int cmd_enumerate(const std::string& object, int n, bool count_only, std::optional<int> ascents, bool only_123,
                  const std::string& family, const std::string& path, bool unsafe, std::ostream& out) {
  CapacityLimits caps = kDefaultLimits;
  if (unsafe) caps = {INT_MAX, INT_MAX, INT_MAX, INT_MAX, INT_MAX, INT_MAX};
  if (n < 0) throw PreconditionError("n must be nonnegative");
  BigInt count = 0;
  auto emit = [&](const std::string& line) {
    ++count;
    if (!count_only) out << line << '\n';
  };
  if ((ascents || only_123) && object != "parking_functions_123" && object != "parking_trees")
    throw PreconditionError("--ascents and --only-123 apply to parking functions and parking trees");
  if (object == "dyck") {
    check_cap(n, caps.words, "Dyck word enumeration");
    for_each_word(n, WordKind::dyck(), [&](const Word& w) { emit(w.str()); });
  } else if (object == "parking_functions_123") {
    check_cap(n, caps.functions, "parking function enumeration");
    for_each_123_avoiding_parking(n, [&](const FiniteFunction& f) {
      if (!ascents || fn_ascents(f) == *ascents) emit(f.str());
    });
  } else if (object == "parking_trees") {
    check_cap(n, caps.parking_trees, "parking tree enumeration");
    for_each_parking_tree(
        n,
        [&](const ParkingTree& t) {
          if (!ascents && !only_123) {
            emit(t.str());
            return;
          }
          FiniteFunction f = tree_to_function(t);
          if (only_123 && !fn_is_123_avoiding(f)) return;
          if (ascents && fn_ascents(f) != *ascents) return;
          emit(t.str());
        },
        caps.parking_trees);
  } else if (object == "b_perms") {
    Source src = resolve_source(family, path);
    if (src.polytope) {
      if (*src.polytope == Family::cyclohedron) throw PreconditionError("the cyclohedron has no building set here");
      src.named = building_set_of(*src.polytope);
    }
    BuildingSet bs = src.file ? *src.file : named_family(*src.named, n);
    if (bs.ground_size() != n + 1)
      throw PreconditionError("building set ground size " + std::to_string(bs.ground_size()) + " does not match n+1");
    check_cap(n, caps.b_permutations, "B-permutation enumeration");
    for_each_b_permutation(bs, [&](const Permutation& p) { emit(p.str()); }, caps.b_permutations);
  } else {
    throw PreconditionError("unknown object '" + object + "'");
  }
  if (count_only) out << count << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toric g-vectors of simple polytopes and chordal nestohedra", "toricg"};
  app.require_subcommand(1);

  std::string family, path, route = "gamma", format = "csv";
  int max_n = 8;
  bool unsafe = false;
  auto* table = app.add_subcommand("table", "Toric g-vector table, one row per dimension");
  table->add_option("--family", family,
                    "cube, associahedron, cyclohedron, permutahedron, stanley_pitman, "
                    "associahedron_intervals or interpolation:<r>");
  table->add_option("--building-set", path, "JSON building set file");
  table->add_option("--max", max_n, "Largest dimension")->capture_default_str();
  table->add_option("--route", route, "Computation route")
      ->check(CLI::IsMember({"gamma", "hvector", "direct", "all"}))
      ->capture_default_str();
  table->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  table->add_flag("--unsafe-max", unsafe, "Lift the capacity bounds");

  std::string suite;
  int verify_n = 8;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("n_max", verify_n, "Largest size checked")->capture_default_str();
  verify->add_flag("--unsafe-max", unsafe, "Lift the capacity bounds");

  std::string object;
  int enum_n = 0;
  bool count_only = false, only_123 = false;
  std::optional<int> ascents;
  auto* enumerate = app.add_subcommand("enumerate", "Stream combinatorial objects, one per line");
  enumerate->add_option("object", object, "Object kind")
      ->required()
      ->check(CLI::IsMember({"dyck", "parking_functions_123", "parking_trees", "b_perms"}));
  enumerate->add_option("n", enum_n, "Size")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the number of objects");
  enumerate->add_option("--ascents", ascents, "Keep objects whose function has this many ascents");
  enumerate->add_flag("--only-123", only_123, "Keep parking trees encoding 123-avoiding functions");
  enumerate->add_option("--family", family, "Building set family for b_perms");
  enumerate->add_option("--building-set", path, "JSON building set file for b_perms");
  enumerate->add_flag("--unsafe-max", unsafe, "Lift the capacity bounds");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*table) return cmd_table(family, path, max_n, route, format, unsafe, out);
    if (*verify) return cmd_verify(suite, verify_n, unsafe, out);
    return cmd_enumerate(object, enum_n, count_only, ascents, only_123, family, path, unsafe, out);
  } catch (const RouteMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace toricg::cli
