#include "doctest.h"
#include "oracles.hpp"

#include "toricg/perms.hpp"

#include <map>

using namespace toricg;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

const Permutation kSample = P({7, 10, 5, 9, 8, 2, 6, 1, 4, 3});
const Permutation kTreeSample = P({2, 1, 4, 5, 6, 8, 7, 9, 3, 10, 11});

bool plain_ddes_or_final(const std::vector<int>& v) {
  int n = static_cast<int>(v.size());
  if (n >= 2 && v[n - 2] > v[n - 1]) return true;
  for (int i = 1; i + 1 < n; ++i)
    if (v[i - 1] > v[i] && v[i] > v[i + 1]) return true;
  return false;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(P({1, 1, 2}), StructuralError);
  CHECK(Permutation::parse("7 10 5 9 8 2 6 1 4 3") == kSample);
  CHECK(kSample.inverse().inverse() == kSample);
  CHECK(kSample.inverse()(7) == 1);
  CHECK(asc_des(P({1, 2, 3})).ascents == IntSet{1, 2});
  CHECK(asc_des(P({1, 2, 3})).descents.empty());
  CHECK(asc_des(kSample).ascents == IntSet{1, 3, 6, 8});
  CHECK(asc_des(P({2, 1})).descents == IntSet{1});
  CHECK(des(kSample) == 5);
}

TEST_CASE("pattern avoidance agrees with the cubic oracle") {
  CHECK(is_123_avoiding(P({3, 2, 1})));
  CHECK(is_123_avoiding(kSample));
  CHECK_FALSE(is_123_avoiding(P({1, 3, 2, 4})));
  for (int n = 0; n <= 7; ++n) {
    long count = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      bool want = oracle::avoids_123(p.images(), false);
      CHECK(is_123_avoiding(p) == want);
      CHECK(is_312_avoiding(p) == oracle::avoids_312(p.images()));
      count += want;
    });
    CHECK(count == catalan(n));
  }
  CHECK(enumerate_123_avoiding(3).size() == 5);
  CHECK(enumerate_123_avoiding(6).size() == 132);
  CHECK(enumerate_123_avoiding(1) == std::vector<Permutation>{P({1})});
}

TEST_CASE("krattenthaler") {
  CHECK(krattenthaler(kSample) == Word::parse("U^4 D^2 U^2 D^3 U^3 D^2 U D^3"));
  CHECK(krattenthaler(P({1})).str() == "UD");
  CHECK(krattenthaler(P({3, 2, 1})).str() == "UDUDUD");
  CHECK_THROWS_AS(krattenthaler(P({1, 2, 3})), PreconditionError);
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> images;
    for_each_123_avoiding(n, [&](const Permutation& p) {
      Word w = krattenthaler(p);
      CHECK(w.is_dyck());
      CHECK(krattenthaler_inverse(w) == p);
      CHECK(asc(p.inverse()) == factor_count(w, "UUD"));
      CHECK(asc(p) == factor_count(w, "UDD"));
      images.insert(w.str());
    });
    CHECK(BigInt(images.size()) == catalan(n));
  }
}

TEST_CASE("foata-strehl trees") {
  FSTree t = fs_tree(kTreeSample);
  CHECK(t.root() == 1);
  CHECK(t.left(1) == 2);
  CHECK(t.right(1) == 3);
  CHECK(t.left(3) == 4);
  CHECK(t.right(3) == 10);
  CHECK(t.left(4) == 0);
  CHECK(t.right(4) == 5);
  CHECK(t.right(5) == 6);
  CHECK(t.right(6) == 7);
  CHECK(t.left(7) == 8);
  CHECK(t.right(7) == 9);
  CHECK(t.right(10) == 11);
  CHECK(fs_inorder(fs_phi(fs_phi(t, 5), 1)) == P({4, 6, 8, 7, 9, 5, 3, 10, 11, 1, 2}));
  CHECK(fs_phi(fs_phi(t, 7), 7) == t);
  CHECK(fs_psi(t, 7) == t);
  CHECK(fs_psi(t, 4) == fs_phi(t, 4));
  CHECK(is_right_adjusted(fs_tree(P({1, 2, 3}))));
  CHECK_FALSE(is_right_adjusted(fs_tree(P({3, 2, 1}))));
  CHECK(fs_tree(P({1, 2, 3})).str() == "(1 R(2 R(3)))");
  CHECK_THROWS(fs_phi(t, 12));
}

TEST_CASE("foata-strehl round trip and commuting phi") {
  for (int n = 0; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& p) { CHECK(fs_inorder(fs_tree(p)) == p); });
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      FSTree t = fs_tree(p);
      for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) CHECK(fs_phi(fs_phi(t, x), y) == fs_phi(fs_phi(t, y), x));
    });
}

TEST_CASE("right-adjusted representatives match the orbit oracle") {
  CHECK(right_adjusted_rep(P({3, 2, 1})) == P({1, 2, 3}));
  for (int n = 1; n <= 6; ++n) {
    std::set<Permutation> covered;
    for_each_permutation(n, [&](const Permutation& p) {
      auto orbit = oracle::psi_orbit(p);
      std::vector<Permutation> reps;
      for (const auto& q : orbit)
        if (!plain_ddes_or_final(q.images())) reps.push_back(q);
      REQUIRE(reps.size() == 1);
      CHECK(right_adjusted_rep(p) == reps[0]);
      CHECK(is_right_adjusted(fs_tree(reps[0])));
      covered.insert(orbit.begin(), orbit.end());
    });
    CHECK(BigInt(covered.size()) == factorial(n));
  }
}

TEST_CASE("increasing 0-1-2 trees") {
  CHECK(enumerate_increasing_012(2).size() == 1);
  for (int v = 1; v <= 7; ++v) {
    std::vector<long> want;
    long total = oracle::count_increasing_012(v, want);
    std::vector<long> got(v, 0);
    std::set<Permutation> reps;
    for_each_increasing_012(v, [&](const PlaneTree& t) {
      CHECK(t.is_increasing());
      CHECK(t.max_children() <= 2);
      ++got[t.fork_count()];
      FSTree fs = to_fs_tree(t);
      CHECK(is_right_adjusted(fs));
      CHECK(to_plane_tree(fs) == t);
      reps.insert(fs_inorder(fs));
    });
    CHECK(got == want);
    CHECK(static_cast<long>(reps.size()) == total);
    // Trees with j forks correspond to orbit representatives with j descents.
    std::vector<long> by_des(v, 0);
    for_each_permutation(v, [&](const Permutation& p) {
      CHECK((has_double_descent(p) || has_final_descent(p)) == plain_ddes_or_final(p.images()));
      if (!plain_ddes_or_final(p.images())) {
        ++by_des[des(p)];
        CHECK(reps.count(p) == 1);
      }
    });
    CHECK(by_des == want);
  }
  std::vector<long> d3, d4;
  oracle::count_increasing_012(3, d3);
  oracle::count_increasing_012(4, d4);
  CHECK(d3 == std::vector<long>{1, 2, 0});
  CHECK(d4 == std::vector<long>{1, 8, 0, 0});
}
