#include "toricg/verify.hpp"

#include "toricg/compat.hpp"
#include "toricg/nestohedra.hpp"
#include "toricg/parking.hpp"
#include "toricg/perms.hpp"
#include "toricg/polyvec.hpp"
#include "toricg/words.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <map>
#include <sstream>

namespace toricg {

bool SuiteReport::ok() const {
  return informational || std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "toricg/1";
  j["suite"] = suite;
  j["n_max"] = n_max;
  j["informational"] = informational;
  j["ok"] = ok();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["n_max"] = c.n_max;
    e["cases"] = c.cases;
    e["ok"] = c.ok;
    e["detail"] = c.detail;
    j["checks"].push_back(e);
  }
  return j.dump(2);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bijections", "compat", "series", "gamma", "nestohedra", "conjectures"};
  return names;
}

namespace {

/// Records cases and keeps the first failure message.
class Recorder {
 public:
  Recorder(SuiteReport& r, std::string name, int n_max) : r_(r) {
    c_.name = std::move(name);
    c_.n_max = n_max;
  }
  ~Recorder() { r_.checks.push_back(c_); }
  Recorder(const Recorder&) = delete;
  Recorder& operator=(const Recorder&) = delete;

  void expect(bool cond, const std::string& what) {
    ++c_.cases;
    if (!cond && c_.ok) {
      c_.ok = false;
      c_.detail = what;
    }
  }
  template <class F>
  void expect_lazy(bool cond, F&& what) {
    ++c_.cases;
    if (!cond && c_.ok) {
      c_.ok = false;
      c_.detail = what();
    }
  }
  void note(const std::string& s) {
    if (c_.ok) c_.detail = s;
  }
  void guard(const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, std::string("exception: ") + e.what());
    }
  }

 private:
  SuiteReport& r_;
  CheckResult c_;
};

std::string nstr(int n) { return "n=" + std::to_string(n); }

IntPoly brute_peak(int n, int m) {
  IntVec c(n + 1, 0);
  for_each_word(n, WordKind::dyck(), [&](const Word& w) {
    int k = 0;
    for (int i = 0; i + 1 < std::min(m, w.size()); ++i) k += w[i] == Letter::U && w[i + 1] == Letter::D;
    c[k] += 1;
  });
  return IntPoly(c);
}

IntPoly ascent_poly_123_functions(int n, bool parking_only) {
  IntVec c(n + 1, 0);
  auto count = [&](const FiniteFunction& f) { c[fn_ascents(f)] += 1; };
  if (parking_only)
    for_each_123_avoiding_parking(n, count);
  else
    for_each_123_avoiding_function(n, count);
  return IntPoly(c);
}

void suite_bijections(SuiteReport& r, int n_max) {
  {
    int top = n_max;
    Recorder rec(r, "krattenthaler round trip on 123-avoiding permutations", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n) {
        BigInt count = 0;
        for_each_123_avoiding(n, [&](const Permutation& p) {
          ++count;
          Word w = krattenthaler(p);
          rec.expect_lazy(w.is_dyck() && krattenthaler_inverse(w) == p, [&] { return "kr round trip fails at " + p.str(); });
        });
        rec.expect(count == catalan(n), "123-avoiding count differs from Catalan at " + nstr(n));
      }
    });
  }
  {
    int top = std::min(n_max, 6);
    Recorder rec(r, "garsia-haiman round trip on all functions", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n)
        for_each_function(n, [&](const FiniteFunction& f) {
          GHPair gh = garsia_haiman(f);
          bool ok = gh_compatible(gh.perm, gh.word) && garsia_haiman_inverse(gh) == f &&
                    gh.word.is_dyck() == is_parking(f);
          rec.expect_lazy(ok, [&] { return "garsia-haiman fails at " + f.str(); });
        });
    });
  }
  {
    int top = n_max;
    Recorder rec(r, "dyck to lukasiewicz round trip", top);
    rec.guard([&] {
      for (int n = 0; n <= top; ++n)
        for_each_word(n, WordKind::dyck(), [&](const Word& w) {
          LukasiewiczWord l = dyck_to_lukasiewicz(w);
          rec.expect_lazy(is_lukasiewicz(l) && lukasiewicz_to_dyck(l) == w, [&] { return "fails at " + w.str(); });
        });
    });
  }
  {
    int top = n_max;
    Recorder rec(r, "dyck to noncrossing partition round trip", top);
    rec.guard([&] {
      for (int n = 0; n <= top; ++n)
        for_each_word(n, WordKind::dyck(), [&](const Word& w) {
          rec.expect_lazy(nc_to_dyck(dyck_to_nc(w)) == w, [&] { return "fails at " + w.str(); });
        });
    });
  }
  {
    int top = std::min(n_max, 6);
    Recorder rec(r, "dfs and bfs parking trees round trip", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n)
        for_each_function(n, [&](const FiniteFunction& f) {
          if (!is_parking(f)) return;
          ParkingTree d = dfs_tree(f);
          ParkingTree b = bfs_tree(f);
          d.validate();
          b.validate();
          rec.expect_lazy(tree_to_function(d) == f && tree_to_function(b) == f,
                          [&] { return "tree encoding fails at " + f.str(); });
        });
    });
  }
}

void suite_compat(SuiteReport& r, int n_max) {
  {
    int top = std::min(n_max, 7);
    Recorder rec(r, "compress and expand are inverse bijections", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n) {
        auto sp = sparse_subsets(1, n - 1);
        for (const auto& A : sp)
          for (const auto& B : sp) {
            int k = n - static_cast<int>(A.size() + B.size());
            if (k < 0) continue;
            for_each_word(n, WordKind::dyck(), [&](const Word& w) {
              if (!is_compatible(w, A, B)) return;
              rec.expect_lazy(expand(compress(w, A, B), n, A, B) == w, [&] { return "expand(compress) fails at " + w.str(); });
            });
            for_each_word(k, WordKind::dyck(), [&](const Word& w) {
              Word e = expand(w, n, A, B);
              rec.expect_lazy(e.is_dyck() && is_compatible(e, A, B) && compress(e, A, B) == w,
                              [&] { return "compress(expand) fails at " + w.str(); });
            });
          }
      }
    });
  }
  {
    int top = std::min(n_max, 7);
    Recorder rec(r, "compatible dyck words are counted by Catalan numbers", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n) {
        auto sp = sparse_subsets(1, n - 1);
        for (const auto& A : sp)
          for (const auto& B : sp) {
            int k = n - static_cast<int>(A.size() + B.size());
            BigInt want = k < 0 ? BigInt(0) : catalan(k);
            rec.expect(count_compatible(n, A, B, CompatKind::dyck) == want,
                       "count mismatch at " + nstr(n) + " A={" + join_ints(A, ",") + "} B={" + join_ints(B, ",") + "}");
          }
      }
    });
  }
  {
    int top = std::min(n_max, 6);
    Recorder rec(r, "compatible balanced words are counted by central binomials", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n) {
        auto sp = sparse_subsets(1, n - 1);
        for (const auto& A : sp)
          for (const auto& B : sp) {
            int k = n - static_cast<int>(A.size() + B.size());
            BigInt want = k < 0 ? BigInt(0) : binomial(2 * k, k);
            rec.expect(count_compatible(n, A, B, CompatKind::balanced) == want,
                       "count mismatch at " + nstr(n) + " A={" + join_ints(A, ",") + "} B={" + join_ints(B, ",") + "}");
          }
      }
    });
  }
  {
    int top = n_max;
    Recorder rec(r, "statistic transfers: blocks and ascents to UUD, fillers to UDD", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n) {
        for_each_word(n, WordKind::dyck(), [&](const Word& w) {
          NoncrossingPartition p = dyck_to_nc(w);
          rec.expect_lazy(p.nonsingleton_blocks() == factor_count(w, "UUD") &&
                              static_cast<int>(fillers(p).size()) == factor_count(w, "UDD") && is_sparse(fillers(p)),
                          [&] { return "partition statistics fail at " + w.str(); });
        });
        for_each_123_avoiding(n, [&](const Permutation& p) {
          rec.expect_lazy(asc(p.inverse()) == factor_count(krattenthaler(p), "UUD"),
                          [&] { return "ascent transfer fails at " + p.str(); });
        });
      }
    });
  }
  {
    int top = std::min(n_max, 8);
    Recorder rec(r, "g_{n,0} coefficients: ascents, blocks, fillers, NC complex faces", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n) {
        IntVec asc_c(n + 1, 0), blocks(n + 1, 0), fill(n + 1, 0);
        for_each_123_avoiding(n, [&](const Permutation& p) { asc_c[asc(p)] += 1; });
        for_each_nc_partition(n, [&](const NoncrossingPartition& p) {
          blocks[p.nonsingleton_blocks()] += 1;
          fill[fillers(p).size()] += 1;
        });
        IntPoly g = g_contrib(n, 0);
        for (int k = 0; k <= n; ++k) {
          BigInt want = g.coeff(k);
          rec.expect(asc_c[k] == want && blocks[k] == want && fill[k] == want && nc_complex_faces(n, k) == want,
                     "coefficient " + std::to_string(k) + " at " + nstr(n));
        }
      }
    });
  }
  {
    int top = std::min(n_max, 7);
    Recorder rec(r, "g_{n,|J|} counts partitions whose fillers contain J", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n) {
        std::vector<std::pair<int, IntSet>> parts;
        for_each_nc_partition(n, [&](const NoncrossingPartition& p) { parts.emplace_back(p.nonsingleton_blocks(), fillers(p)); });
        for (const auto& J : sparse_subsets(2, n)) {
          IntVec c(n + 1, 0);
          for (const auto& [k, f] : parts)
            if (std::includes(f.begin(), f.end(), J.begin(), J.end())) c[k] += 1;
          rec.expect(IntPoly(c) == g_contrib(n, static_cast<int>(J.size())),
                     "J={" + join_ints(J, ",") + "} at " + nstr(n));
        }
      }
    });
  }
  {
    int top = std::min(n_max, 7);
    Recorder rec(r, "g_{n,|B|} counts (empty,B)-compatible words by UUD", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n)
        for (const auto& B : sparse_subsets(1, n - 1)) {
          IntVec c(n + 1, 0);
          for_each_word(n, WordKind::dyck(), [&](const Word& w) {
            if (is_compatible(w, {}, B)) c[factor_count(w, "UUD")] += 1;
          });
          rec.expect(IntPoly(c) == g_contrib(n, static_cast<int>(B.size())), "B={" + join_ints(B, ",") + "} at " + nstr(n));
        }
    });
  }
}

void suite_series(SuiteReport& r, int n_max) {
  for (const auto& check : verify_series(n_max)) {
    Recorder rec(r, "series: " + check.name, n_max);
    rec.expect(check.ok, check.failure);
  }
  {
    int top = std::min(n_max, 8);
    Recorder rec(r, "peak recurrence matches brute-force peak weights", top);
    rec.guard([&] {
      auto table = peak_table(top);
      for (int n = 0; n <= top; ++n)
        for (int m = 0; m <= 2 * n; ++m)
          rec.expect(table[n][m] == brute_peak(n, m), "p_{" + std::to_string(n) + "," + std::to_string(m) + "}");
    });
  }
  {
    int top = n_max;
    Recorder rec(r, "g_{n,j} = p_{n-j,n} for 2j <= n", top);
    rec.guard([&] {
      auto table = peak_table(top);
      for (int n = 0; n <= top; ++n)
        for (int j = 0; 2 * j <= n; ++j)
          rec.expect(g_contrib(n, j) == table[n - j][n], "g_{" + std::to_string(n) + "," + std::to_string(j) + "}");
    });
  }
  {
    int top = n_max;
    Recorder rec(r, "narayana polynomials at 1 are Catalan numbers", top);
    for (int k = 1; k <= top; ++k) rec.expect(narayana(k).eval(1) == catalan(k), "N_" + std::to_string(k));
  }
}

void suite_gamma(SuiteReport& r, int n_max) {
  const Family all[] = {Family::cube, Family::associahedron, Family::cyclohedron, Family::permutahedron};
  {
    Recorder rec(r, "closed-form h-vectors match gamma vectors", n_max);
    rec.guard([&] {
      for (Family f : all)
        for (int n = 1; n <= n_max; ++n)
          rec.expect(gamma_to_h(gamma_family(f, n), n) == h_family(f, n) && h_to_gamma(h_family(f, n)) == gamma_family(f, n),
                     family_name(f) + " " + nstr(n));
    });
  }
  {
    Recorder rec(r, "h-vector route equals gamma route", n_max);
    rec.guard([&] {
      for (Family f : all)
        for (int n = 1; n <= n_max; ++n)
          rec.expect(toric_g_from_h(h_family(f, n)) == toric_g_from_gamma(n, gamma_family(f, n)), family_name(f) + " " + nstr(n));
    });
  }
  {
    Recorder rec(r, "backward differences of h from gamma", n_max);
    rec.guard([&] {
      for (Family f : all)
        for (int n = 1; n <= n_max; ++n) {
          IntVec h = h_family(f, n);
          IntVec g = gamma_family(f, n);
          for (int i = 1; 2 * i <= n; ++i) {
            BigInt s = 0;
            for (int j = 0; j <= i && j < static_cast<int>(g.size()); ++j) s += catalan_triangle(n - 2 * j, i - j) * g[j];
            rec.expect(h[i] - h[i - 1] == s, family_name(f) + " " + nstr(n) + " i=" + std::to_string(i));
          }
        }
    });
  }
  {
    int top = std::min(n_max, 7);
    Recorder rec(r, "permutahedron: Eulerian h, fork counts and descent classes", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n) {
        IntVec h(n + 1, 0), g(n / 2 + 1, 0), forks(n / 2 + 1, 0);
        for_each_permutation(n + 1, [&](const Permutation& p) {
          h[des(p)] += 1;
          if (!has_double_descent(p) && !has_final_descent(p)) g[des(p)] += 1;
        });
        for_each_increasing_012(n + 1, [&](const PlaneTree& t) { forks[t.fork_count()] += 1; });
        IntVec want = gamma_family(Family::permutahedron, n);
        rec.expect(h == eulerian(n + 1) && g == want && forks == want, nstr(n));
      }
    });
  }
  {
    int top = std::max(n_max, 12);
    Recorder rec(r, "g_{n,0}(1) = C_n and g_{n,0}(0) = 1", top);
    for (int n = 0; n <= top; ++n)
      rec.expect(g_contrib(n, 0).eval(1) == catalan(n) && g_contrib(n, 0).eval(0) == 1, nstr(n));
  }
  {
    int top = std::min(n_max, 10);
    Recorder rec(r, "C(n,i,x) counts paths by peaks", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n)
        for (int i = 0; 2 * i <= n; ++i) {
          IntVec c(n + 1, 0);
          for_each_word(n, WordKind::nonneg_to_height(n - 2 * i), [&](const Word& w) { c[factor_count(w, "UD")] += 1; });
          rec.expect(IntPoly(c) == cnix(n, i), "C(" + std::to_string(n) + "," + std::to_string(i) + ",x)");
        }
    });
  }
}

void suite_nestohedra(SuiteReport& r, int n_max) {
  int top = std::min(n_max, 6);
  std::vector<std::pair<NamedFamily, int>> cases;  // family, dimension
  for (int n = 1; n <= top; ++n) {
    cases.push_back({{NamedFamily::Kind::stanley_pitman}, n});
    cases.push_back({{NamedFamily::Kind::associahedron_intervals}, n});
    cases.push_back({{NamedFamily::Kind::permutahedron}, n});
    for (int rr = 1; rr <= n; ++rr) cases.push_back({{NamedFamily::Kind::interpolation, rr}, n});
  }
  auto label = [](const NamedFamily& f, int n) { return f.name() + " " + nstr(n); };
  {
    Recorder rec(r, "chordal pipeline: h palindromic, gamma and toric g routes agree", top);
    rec.guard([&] {
      for (const auto& [fam, n] : cases) {
        BuildingSet bs = named_family(fam, n);
        Validation v = validate(bs);
        IntVec h = h_chordal(bs);
        IntVec g = gamma_chordal(bs);
        bool ok = v.connected && v.chordal && is_palindromic(h) && h_to_gamma(h) == g && gamma_by_forks(bs) == g &&
                  toric_g_chordal(bs) == toric_g_from_h(h);
        rec.expect(ok, label(fam, n));
      }
    });
  }
  {
    Recorder rec(r, "named building sets match polytope families", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n) {
        auto g_of = [n](NamedFamily::Kind k) { return toric_g_chordal(named_family({k}, n)); };
        rec.expect(g_of(NamedFamily::Kind::stanley_pitman) == g_contrib(n, 0), "stanley_pitman " + nstr(n));
        rec.expect(gamma_chordal(named_family({NamedFamily::Kind::associahedron_intervals}, n)) ==
                       gamma_family(Family::associahedron, n),
                   "associahedron_intervals " + nstr(n));
        rec.expect(gamma_chordal(named_family({NamedFamily::Kind::permutahedron}, n)) ==
                       gamma_family(Family::permutahedron, n),
                   "permutahedron " + nstr(n));
        rec.expect(named_family({NamedFamily::Kind::interpolation, 1}, n) == named_family({NamedFamily::Kind::permutahedron}, n),
                   "interpolation:1 " + nstr(n));
      }
    });
  }
  {
    int dtop = std::min(n_max, 5);
    Recorder rec(r, "direct parking-tree route agrees with the gamma route", dtop);
    rec.guard([&] {
      for (const auto& [fam, n] : cases)
        if (n <= dtop) rec.expect(toric_g_direct(named_family(fam, n)) == toric_g_chordal(named_family(fam, n)), label(fam, n));
    });
  }
  {
    Recorder rec(r, "123-avoiding parking functions and functions by ascents", top);
    rec.guard([&] {
      for (int n = 1; n <= top; ++n) {
        rec.expect(ascent_poly_123_functions(n, true) == toric_g_from_gamma(n, gamma_family(Family::associahedron, n)),
                   "associahedron " + nstr(n));
        rec.expect(ascent_poly_123_functions(n, false) == toric_g_from_gamma(n, gamma_family(Family::cyclohedron, n)),
                   "cyclohedron " + nstr(n));
      }
    });
  }
}

void suite_conjectures(SuiteReport& r, int n_max) {
  r.informational = true;
  {
    Recorder rec(r, "g_{n,j} real-rooted", n_max);
    std::string failures;
    for (int n = 1; n <= n_max; ++n)
      for (int j = 0; 2 * j <= n; ++j) {
        IntPoly g = g_contrib(n, j);
        bool ok = g.degree() < 1 || sturm_real_rooted(g);
        if (!ok) failures += " g_{" + std::to_string(n) + "," + std::to_string(j) + "}";
        rec.expect(ok, "not real-rooted:" + failures);
      }
    if (failures.empty()) rec.note("all real-rooted");
  }
  const Family fams[] = {Family::associahedron, Family::cyclohedron, Family::permutahedron};
  for (Family f : fams) {
    Recorder rec(r, family_name(f) + " toric g real-rooted", n_max);
    std::string rows;
    for (int n = 1; n <= n_max; ++n) {
      IntPoly g = toric_g_from_gamma(n, gamma_family(f, n));
      bool ok = g.degree() < 1 || sturm_real_rooted(g);
      rows += (rows.empty() ? "" : " ") + std::to_string(n) + (ok ? ":yes" : ":no");
      rec.expect(ok, rows);
    }
    rec.note(rows);
  }
  for (Family f : fams) {
    Recorder rec(r, family_name(f) + " toric g satisfies Kruskal-Katona", n_max);
    std::string rows;
    for (int n = 1; n <= n_max; ++n) {
      bool ok = kruskal_katona_ok(toric_g_from_gamma(n, gamma_family(f, n)).coeffs());
      rows += (rows.empty() ? "" : " ") + std::to_string(n) + (ok ? ":yes" : ":no");
      rec.expect(ok, rows);
    }
    rec.note(rows);
  }
}

}  // namespace

SuiteReport run_suite(const std::string& suite, int n_max) {
  if (n_max < 1) throw PreconditionError("n_max must be at least 1");
  SuiteReport r;
  r.suite = suite;
  r.n_max = n_max;
  if (suite == "bijections") suite_bijections(r, n_max);
  else if (suite == "compat") suite_compat(r, n_max);
  else if (suite == "series") suite_series(r, n_max);
  else if (suite == "gamma") suite_gamma(r, n_max);
  else if (suite == "nestohedra") suite_nestohedra(r, n_max);
  else if (suite == "conjectures") suite_conjectures(r, n_max);
  else throw PreconditionError("unknown suite '" + suite + "'");
  return r;
}

}  // namespace toricg
