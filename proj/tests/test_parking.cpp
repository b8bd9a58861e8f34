#include "doctest.h"
#include "oracles.hpp"

#include "toricg/parking.hpp"

#include <array>
#include <set>

using namespace toricg;

namespace {

FiniteFunction F(std::vector<int> v) { return FiniteFunction(std::move(v)); }

const FiniteFunction kSampleFn = F({7, 5, 10, 7, 3, 6, 1, 4, 3, 1});

const char* kDfsSample =
    "(v=1 [e=7 (v=2)] [e=10 (v=3 [e=5 (v=4 [e=8 (v=5 [e=2 (v=6 [e=6 (v=7 [e=1 (v=8)] [e=4 (v=9)])])])])] "
    "[e=9 (v=10 [e=3 (v=11)])])])";
const char* kBfsSample =
    "(v=1 [e=7 (v=2)] [e=10 (v=3 [e=5 (v=4 [e=8 (v=6 [e=6 (v=8)])])] "
    "[e=9 (v=5 [e=2 (v=7 [e=1 (v=9)] [e=4 (v=10 [e=3 (v=11)])])])])])";

ParkingTree tree(int edges, std::vector<std::array<int, 3>> parent_child_label) {
  ParkingTree t(edges);
  for (auto [p, c, l] : parent_child_label) t.add_child(p, c, l);
  return t;
}

}  // namespace

TEST_CASE("function predicates") {
  CHECK(is_parking(F({1, 1, 1})));
  CHECK_FALSE(is_parking(F({2, 2})));
  CHECK(is_parking(kSampleFn));
  CHECK(fn_is_123_avoiding(F({3, 2, 1})));
  CHECK(fn_ascents(F({3, 2, 1})) == 0);
  CHECK(fn_is_123_avoiding(F({1, 1})));
  CHECK(fn_ascents(F({1, 1})) == 1);
  CHECK(fn_is_123_avoiding(kSampleFn));
  CHECK_FALSE(fn_is_123_avoiding(F({1, 1, 1})));
  CHECK_THROWS_AS(F({0, 1}), StructuralError);
  CHECK_THROWS_AS(F({3, 1}), StructuralError);
  CHECK(FiniteFunction::parse("7 5 10 7 3 6 1 4 3 1") == kSampleFn);
}

TEST_CASE("function streams agree with brute force") {
  for (int n = 0; n <= 5; ++n) {
    long all = 0, avoid = 0, avoid_park = 0;
    std::vector<FiniteFunction> seen;
    for_each_function(n, [&](const FiniteFunction& f) {
      ++all;
      seen.push_back(f);
      bool a = oracle::avoids_123(f.values(), true);
      CHECK(fn_is_123_avoiding(f) == a);
      CHECK(is_parking(f) == oracle::parking(f.values()));
      avoid += a;
      avoid_park += a && oracle::parking(f.values());
    });
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    long c1 = 0, c2 = 0;
    for_each_123_avoiding_function(n, [&](const FiniteFunction& f) {
      CHECK(oracle::avoids_123(f.values(), true));
      ++c1;
    });
    for_each_123_avoiding_parking(n, [&](const FiniteFunction& f) {
      CHECK(oracle::parking(f.values()));
      ++c2;
    });
    CHECK(c1 == avoid);
    CHECK(c2 == avoid_park);
  }
}

TEST_CASE("garsia-haiman") {
  GHPair gh = garsia_haiman(kSampleFn);
  CHECK(gh.perm == Permutation({7, 10, 5, 9, 8, 2, 6, 1, 4, 3}));
  CHECK(gh.word == Word::parse("U^2 D^2 U^2 D U D U D U D U^2 D^3 U D"));
  CHECK(gh_compatible(gh.perm, gh.word));
  CHECK(garsia_haiman(F({1, 2, 3})).word.str() == "UDUDUD");
  CHECK(garsia_haiman(F({1, 2, 3})).perm == Permutation::identity(3));
  CHECK(garsia_haiman(F({1, 1})).word.str() == "UUDD");
  CHECK(garsia_haiman(F({1, 1})).perm == Permutation({1, 2}));

  for (int n = 1; n <= 6; ++n)
    for_each_function(n, [&](const FiniteFunction& f) {
      GHPair p = garsia_haiman(f);
      REQUIRE(garsia_haiman_inverse(p) == f);
      CHECK(gh_compatible(p.perm, p.word));
      CHECK(p.word.is_dyck() == is_parking(f));
      CHECK(is_123_avoiding(p.perm) == fn_is_123_avoiding(f));
    });
}

TEST_CASE("123-avoiding parking functions through krattenthaler") {
  for (int n = 1; n <= 6; ++n)
    for_each_123_avoiding_parking(n, [&](const FiniteFunction& f) {
      GHPair p = garsia_haiman(f);
      Word w = krattenthaler(p.perm);
      CHECK(fn_ascents(f) == factor_count(w, "UUD"));
      std::string v = p.word.str(), ws = w.str();
      for (int i = 1; i < n; ++i) {
        int u = oracle::nth(v, 'U', i);
        if (v[u + 1] != 'U') continue;
        int d = oracle::nth(ws, 'D', i);
        CHECK(ws.compare(d - 1, 3, "UDD") == 0);
      }
    });
}

TEST_CASE("dfs and bfs trees of one function") {
  ParkingTree dfs = ParkingTree::parse(kDfsSample);
  ParkingTree bfs = ParkingTree::parse(kBfsSample);
  CHECK(dfs.str() == kDfsSample);
  CHECK(bfs.str() == kBfsSample);
  CHECK(dfs_tree(kSampleFn) == dfs);
  CHECK(bfs_tree(kSampleFn) == bfs);
  CHECK(tree_to_function(dfs) == kSampleFn);
  CHECK(tree_to_function(bfs) == kSampleFn);
  CHECK(edge_perm(dfs) == Permutation({7, 10, 5, 9, 8, 2, 6, 1, 4, 3}));
  CHECK(edge_perm(bfs) == edge_perm(dfs));
  CHECK(is_123_parking_tree(dfs));

  ParkingTree single = tree(1, {{1, 2, 1}});
  CHECK(tree_to_function(single) == F({1}));
  CHECK(dfs_tree(F({1})) == single);
  CHECK(bfs_tree(F({1})) == single);
  CHECK(edge_perm(single) == Permutation({1}));
  CHECK(is_123_parking_tree(single));
  CHECK(edge_perm(tree(2, {{1, 2, 1}, {1, 3, 2}})) == Permutation({1, 2}));
  CHECK_FALSE(is_123_parking_tree(tree(3, {{1, 2, 1}, {1, 3, 2}, {1, 4, 3}})));
}

TEST_CASE("parking tree validation and parsing") {
  CHECK_THROWS_AS(tree(2, {{1, 2, 2}, {1, 3, 1}}).validate(), StructuralError);
  CHECK_THROWS_AS(tree(2, {{1, 3, 1}, {3, 2, 2}}).validate(), StructuralError);
  CHECK_THROWS_AS(ParkingTree::parse("(v=1 [e=1 (v=2)"), ParseError);
  CHECK_THROWS_AS(ParkingTree::parse("(v=1 [x=1 (v=2)])"), ParseError);
  CHECK_THROWS_AS(dfs_tree(F({2, 2})), PreconditionError);
  CHECK_THROWS_AS(bfs_tree(F({2, 2})), PreconditionError);
}

TEST_CASE("dfs and bfs trees invert tree_to_function") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> dfs_seen, bfs_seen;
    long parking = 0;
    for_each_function(n, [&](const FiniteFunction& f) {
      if (!is_parking(f)) return;
      ++parking;
      ParkingTree d = dfs_tree(f), b = bfs_tree(f);
      d.validate();
      b.validate();
      CHECK(tree_to_function(d) == f);
      CHECK(tree_to_function(b) == f);
      CHECK(edge_perm(d) == garsia_haiman(f).perm);
      CHECK(is_123_parking_tree(d) == fn_is_123_avoiding(f));
      dfs_seen.insert(d.str());
      bfs_seen.insert(b.str());
    });
    CHECK(static_cast<long>(dfs_seen.size()) == parking);
    CHECK(static_cast<long>(bfs_seen.size()) == parking);
  }
}

TEST_CASE("parking tree enumeration") {
  for (int n = 0; n <= 5; ++n) {
    long count = 0;
    std::set<std::string> seen;
    for_each_parking_tree(n, [&](const ParkingTree& t) {
      t.validate();
      CHECK(oracle::parking(tree_to_function(t).values()));
      seen.insert(t.str());
      ++count;
    });
    CHECK(count == factorial(n) * factorial(n));
    CHECK(static_cast<long>(seen.size()) == count);
  }
  long c3 = 0;
  for_each_parking_tree(3, [&](const ParkingTree&) { ++c3; });
  CHECK(c3 == 36);
  CHECK_THROWS_AS(for_each_parking_tree(8, [](const ParkingTree&) {}), CapacityError);
}

TEST_CASE("sibling types and motzkin words of 0-1-2 trees") {
  PlaneTree path(2);
  path.children[1] = {2};
  CHECK(sibling_type(path).empty());
  CHECK(tree_motzkin_word(path).str() == "H");
  PlaneTree cherry(3);
  cherry.children[1] = {2, 3};
  CHECK(sibling_type(cherry) == IntSet{1});
  CHECK(tree_motzkin_word(cherry).str() == "UD");

  for (int v = 2; v <= 8; ++v)
    for_each_increasing_012(v, [&](const PlaneTree& t) {
      IntSet b = sibling_type(t);
      CHECK(is_sparse(b));
      CHECK(static_cast<int>(b.size()) == t.fork_count());
      Word m = tree_motzkin_word(t);
      CHECK(m.size() == v - 1);
      int h = 0;
      for (int i = 0; i < m.size(); ++i) {
        h += m[i] == Letter::U ? 1 : m[i] == Letter::D ? -1 : 0;
        CHECK(h >= 0);
      }
      CHECK(h == 0);
    });
}

TEST_CASE("bfs level bookkeeping") {
  for (int v = 1; v <= 7; ++v)
    for_each_increasing_plane_tree(v, [&](const PlaneTree& t) {
      auto m = bfs_labeled_counts(t);
      REQUIRE(static_cast<int>(m.size()) == v);
      CHECK(m[0] == 1);
      for (int i = 1; i < v; ++i) CHECK(m[i] - i - 1 >= 0);
    });
}
