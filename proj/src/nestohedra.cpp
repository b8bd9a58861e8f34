#include "toricg/nestohedra.hpp"

#include "toricg/parallel.hpp"
#include "toricg/parking.hpp"

#include <algorithm>
#include <bit>
#include <json.hpp>

namespace toricg {

namespace {

Mask bit(int i) { return Mask{1} << (i - 1); }

int top_element(Mask s) { return 32 - std::countl_zero(s); }

std::string set_str(Mask s) { return "{" + join_ints(mask_to_set(s), ",") + "}"; }

}  // namespace

IntSet mask_to_set(Mask s) {
  IntSet out;
  for (int i = 1; s != 0; ++i, s >>= 1)
    if (s & 1U) out.push_back(i);
  return out;
}

Mask set_to_mask(const IntSet& s) {
  Mask m = 0;
  for (int i : s) m |= bit(i);
  return m;
}

BuildingSet::BuildingSet(int ground_size, const std::vector<IntSet>& sets) : m_(ground_size) {
  if (ground_size < 0 || ground_size > kMaxGround)
    throw CapacityError("ground set size must be in [0, " + std::to_string(kMaxGround) + "]");
  for (const auto& s : sets) {
    if (s.empty()) throw StructuralError("building set members must be nonempty");
    for (int i : s)
      if (i < 1 || i > m_) throw StructuralError("member " + std::to_string(i) + " outside the ground set");
    masks_.push_back(set_to_mask(s));
  }
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

BuildingSet BuildingSet::from_masks(int ground_size, std::vector<Mask> masks) {
  std::vector<IntSet> sets;
  for (Mask s : masks) sets.push_back(mask_to_set(s));
  return BuildingSet(ground_size, sets);
}

std::vector<IntSet> BuildingSet::sets() const {
  std::vector<IntSet> out;
  for (Mask s : masks_) out.push_back(mask_to_set(s));
  std::sort(out.begin(), out.end(), [](const IntSet& a, const IntSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool BuildingSet::contains(Mask s) const { return std::binary_search(masks_.begin(), masks_.end(), s); }

BuildingSet BuildingSet::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("building set JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("building set JSON: top level must be an object");
  if (!j.contains("ground_size") || !j["ground_size"].is_number_integer())
    throw ParseError("building set JSON: \"ground_size\" must be an integer");
  if (!j.contains("sets") || !j["sets"].is_array())
    throw ParseError("building set JSON: \"sets\" must be an array");
  long long m = j["ground_size"].get<long long>();
  if (m < 0 || m > kMaxGround)
    throw CapacityError("building set JSON: ground_size must be in [0, " + std::to_string(kMaxGround) + "]");
  std::vector<IntSet> sets;
  const auto& arr = j["sets"];
  for (std::size_t a = 0; a < arr.size(); ++a) {
    std::string where = "building set JSON: sets[" + std::to_string(a) + "]";
    if (!arr[a].is_array()) throw ParseError(where + " must be an array");
    IntSet s;
    for (std::size_t b = 0; b < arr[a].size(); ++b) {
      const auto& v = arr[a][b];
      if (!v.is_number_integer()) throw ParseError(where + "[" + std::to_string(b) + "] must be an integer");
      long long x = v.get<long long>();
      if (x < 1 || x > m) throw ParseError(where + "[" + std::to_string(b) + "] outside [1, ground_size]");
      s.push_back(static_cast<int>(x));
    }
    if (s.empty()) throw ParseError(where + " is empty");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError(where + " repeats an element");
    sets.push_back(std::move(s));
  }
  return BuildingSet(static_cast<int>(m), sets);
}

std::string BuildingSet::to_json() const {
  nlohmann::json j;
  j["ground_size"] = m_;
  j["sets"] = sets();
  return j.dump();
}

Validation validate(const BuildingSet& bs) {
  for (int i = 1; i <= bs.ground_size(); ++i)
    if (!bs.contains(bit(i))) throw ValidationError("missing singleton {" + std::to_string(i) + "}", {{i}});
  const auto& ms = bs.masks();
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b)
      if ((ms[a] & ms[b]) != 0 && !bs.contains(ms[a] | ms[b]))
        throw ValidationError("union of " + set_str(ms[a]) + " and " + set_str(ms[b]) + " is missing",
                              {mask_to_set(ms[a]), mask_to_set(ms[b])});
  Validation v;
  v.connected = bs.ground_size() > 0 && bs.contains(bs.full());
  v.chordal = v.connected;
  for (Mask s : ms) {
    for (Mask suffix = s & (s - 1); suffix != 0 && v.chordal; suffix &= suffix - 1)
      if (!bs.contains(suffix)) v.chordal = false;
  }
  return v;
}

BuildingSet graphical(int m, const std::vector<std::pair<int, int>>& edges) {
  if (m < 0 || m > BuildingSet::kMaxGround) throw CapacityError("graph too large for a building set");
  std::vector<Mask> adj(m + 1, 0);
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > m || v > m || u == v) throw PreconditionError("edge outside a simple graph on [m]");
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << m); ++s) {
    Mask seen = s & (~s + 1);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (int v : mask_to_set(frontier)) next |= adj[v];
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen == s) out.push_back(s);
  }
  return BuildingSet::from_masks(m, out);
}

std::vector<Mask> restrict_to(const BuildingSet& bs, Mask t) {
  std::vector<Mask> out;
  for (Mask s : bs.masks())
    if ((s & ~t) == 0) out.push_back(s);
  return out;
}

std::vector<Mask> components(const BuildingSet& bs, Mask t) {
  std::vector<Mask> r = restrict_to(bs, t);
  std::vector<Mask> out;
  for (Mask s : r) {
    bool maximal = std::none_of(r.begin(), r.end(), [s](Mask o) { return o != s && (s & ~o) == 0; });
    if (maximal) out.push_back(s);
  }
  return out;
}

namespace {

/// Union of the members inside t that contain x: the component of x in B|_t.
Mask component_of(const BuildingSet& bs, Mask t, int x) {
  Mask comp = 0;
  for (Mask s : bs.masks())
    if ((s & ~t) == 0 && (s & bit(x)) != 0) comp |= s;
  return comp;
}

void require_connected(const BuildingSet& bs) {
  if (!validate(bs).connected) throw PreconditionError("building set is not connected");
}

void require_chordal(const BuildingSet& bs) {
  Validation v = validate(bs);
  if (!v.connected) throw PreconditionError("building set is not connected");
  if (!v.chordal)
    throw PreconditionError(
        "building set is not chordal; its h-vector needs the B-tree formula, which is not implemented");
}

int dimension_checked(const BuildingSet& bs, int max_n, const char* what) {
  int n = bs.ground_size() - 1;
  if (n > max_n)
    throw CapacityError(std::string(what) + " is bounded by n <= " + std::to_string(max_n) + " (got " +
                        std::to_string(n) + ")");
  return n;
}

void gen_b_perms(const BuildingSet& bs, std::vector<int>& cur, Mask used, int cur_max,
                 const std::function<void(const Permutation&)>& visit) {
  int m = bs.ground_size();
  if (static_cast<int>(cur.size()) == m) {
    visit(Permutation(cur));
    return;
  }
  for (int v = 1; v <= m; ++v) {
    if (used & bit(v)) continue;
    Mask t = used | bit(v);
    int mx = std::max(cur_max, v);
    if ((component_of(bs, t, mx) & bit(v)) == 0) continue;
    cur.push_back(v);
    gen_b_perms(bs, cur, t, mx, visit);
    cur.pop_back();
  }
}

}  // namespace

bool is_b_permutation(const BuildingSet& bs, const Permutation& p) {
  if (p.size() != bs.ground_size()) throw PreconditionError("permutation size differs from the ground set");
  Mask t = 0;
  int mx = 0;
  for (int i = 1; i <= p.size(); ++i) {
    t |= bit(p(i));
    mx = std::max(mx, p(i));
    if ((component_of(bs, t, mx) & bit(p(i))) == 0) return false;
  }
  return true;
}

void for_each_b_permutation(const BuildingSet& bs, const std::function<void(const Permutation&)>& visit,
                            int max_n) {
  dimension_checked(bs, max_n, "B-permutation enumeration");
  require_connected(bs);
  std::vector<int> cur;
  gen_b_perms(bs, cur, 0, 0, visit);
}

std::vector<Permutation> b_permutations(const BuildingSet& bs, int max_n) {
  std::vector<Permutation> out;
  for_each_b_permutation(bs, [&](const Permutation& p) { out.push_back(p); }, max_n);
  return out;
}

IntVec h_chordal(const BuildingSet& bs, int max_n) {
  require_chordal(bs);
  int n = bs.ground_size() - 1;
  IntVec h(n + 1, 0);
  for_each_b_permutation(bs, [&](const Permutation& p) { h[des(p)] += 1; }, max_n);
  return h;
}

IntVec gamma_chordal(const BuildingSet& bs, int max_n) {
  require_chordal(bs);
  int n = bs.ground_size() - 1;
  IntVec g(n / 2 + 1, 0);
  for_each_b_permutation(
      bs,
      [&](const Permutation& p) {
        if (!has_double_descent(p) && !has_final_descent(p)) g[des(p)] += 1;
      },
      max_n);
  return g;
}

IntVec gamma_by_forks(const BuildingSet& bs, int max_n) {
  require_chordal(bs);
  int n = bs.ground_size() - 1;
  std::vector<Permutation> reps;
  for_each_b_permutation(bs, [&](const Permutation& p) { reps.push_back(right_adjusted_rep(p)); }, max_n);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  IntVec g(n / 2 + 1, 0);
  for (const auto& r : reps)
    if (is_b_permutation(bs, r)) g[fs_tree(r).fork_count()] += 1;
  return g;
}

IntPoly toric_g_chordal(const BuildingSet& bs, int max_n) {
  return toric_g_from_gamma(bs.ground_size() - 1, gamma_chordal(bs, max_n));
}

IntPoly toric_g_direct(const BuildingSet& bs, int max_n) {
  int n = dimension_checked(bs, max_n, "the direct toric g route");
  require_chordal(bs);
  std::vector<PlaneTree> shapes;
  for_each_increasing_012(n + 1, [&](const PlaneTree& t) {
    Permutation pi = fs_inorder(to_fs_tree(t));
    if (is_b_permutation(bs, pi) && !has_double_descent(pi) && !has_final_descent(pi)) shapes.push_back(t);
  });
  std::vector<IntVec> counts = parallel_map<IntVec>(shapes.size(), [&](std::size_t s) {
    IntVec c(n + 1, 0);
    for_each_edge_labeling(shapes[s], true, [&](const Permutation& pi) {
      FiniteFunction f = tree_to_function(with_edge_labels(shapes[s], pi));
      if (fn_is_123_avoiding(f)) c[fn_ascents(f)] += 1;
    });
    return c;
  });
  IntVec total(n + 1, 0);
  for (const auto& c : counts)
    for (int k = 0; k <= n; ++k) total[k] += c[k];
  return IntPoly(total);
}

std::string NamedFamily::name() const {
  switch (kind) {
    case Kind::permutahedron: return "permutahedron";
    case Kind::stanley_pitman: return "stanley_pitman";
    case Kind::associahedron_intervals: return "associahedron_intervals";
    case Kind::interpolation: return "interpolation:" + std::to_string(r);
  }
  return "";
}

NamedFamily NamedFamily::parse(const std::string& text) {
  if (text == "permutahedron") return {Kind::permutahedron};
  if (text == "stanley_pitman") return {Kind::stanley_pitman};
  if (text == "associahedron_intervals") return {Kind::associahedron_intervals};
  const std::string prefix = "interpolation:";
  if (text.rfind(prefix, 0) == 0) {
    std::string digits = text.substr(prefix.size());
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 4)
      return {Kind::interpolation, std::stoi(digits)};
  }
  throw ParseError("unknown building-set family '" + text + "'");
}

BuildingSet named_family(const NamedFamily& family, int n) {
  if (n < 1) throw PreconditionError("dimension must be at least 1");
  int m = n + 1;
  if (m > BuildingSet::kMaxGround) throw CapacityError("ground set too large");
  std::vector<Mask> out;
  Mask full = (Mask{1} << m) - 1;
  switch (family.kind) {
    case NamedFamily::Kind::permutahedron:
      for (Mask s = 1; s <= full; ++s) out.push_back(s);
      break;
    case NamedFamily::Kind::stanley_pitman:
      for (int i = 1; i <= m; ++i) {
        out.push_back(bit(i));
        out.push_back(full & ~(bit(i) - 1));
      }
      break;
    case NamedFamily::Kind::associahedron_intervals:
      for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) out.push_back((bit(j) | (bit(j) - 1)) & ~(bit(i) - 1));
      break;
    case NamedFamily::Kind::interpolation:
      if (family.r < 1 || family.r > n) throw PreconditionError("interpolation needs 1 <= r <= n");
      for (int i = 1; i <= family.r; ++i) out.push_back(bit(i));
      for (Mask s = 1; s <= full; ++s)
        if (top_element(s) >= family.r + 1) out.push_back(s);
      break;
  }
  return BuildingSet::from_masks(m, out);
}

}  // namespace toricg
