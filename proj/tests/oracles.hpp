#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the value types, and are meant to be obviously correct
// rather than fast.

#include "toricg/nestohedra.hpp"
#include "toricg/parking.hpp"
#include "toricg/perms.hpp"
#include "toricg/polyvec.hpp"
#include "toricg/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using toricg::BigInt;
using toricg::IntVec;

inline bool avoids_123(const std::vector<int>& v, bool weak) {
  int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (weak ? (v[i] <= v[j] && v[j] <= v[k]) : (v[i] < v[j] && v[j] < v[k])) return false;
      }
  return true;
}

inline bool avoids_312(const std::vector<int>& v) {
  int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (v[j] < v[k] && v[k] < v[i]) return false;
  return true;
}

inline bool parking(const std::vector<int>& v) {
  std::vector<int> s = v;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > static_cast<int>(i) + 1) return false;
  return true;
}

/// All words over {U,D} of the given length, as strings.
inline std::vector<std::string> all_ud(int len) {
  std::vector<std::string> out;
  for (long m = 0; m < (1L << len); ++m) {
    std::string s;
    for (int i = len - 1; i >= 0; --i) s += ((m >> i) & 1) ? 'D' : 'U';
    out.push_back(s);
  }
  return out;
}

inline bool dyck(const std::string& s) {
  int h = 0;
  for (char c : s) {
    h += c == 'U' ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

inline int count_factor(const std::string& s, const std::string& f) {
  int c = 0;
  for (std::size_t i = 0; i + f.size() <= s.size(); ++i) c += s.compare(i, f.size(), f) == 0;
  return c;
}

/// Dyck words with a peak count restricted to the first m letters.
inline IntVec peak_weights(int n, int m) {
  IntVec c(n + 1, 0);
  for (const auto& s : all_ud(2 * n)) {
    if (!dyck(s)) continue;
    c[count_factor(s.substr(0, std::min<std::size_t>(m, s.size())), "UD")] += 1;
  }
  return c;
}

/// Letter positions of the k-th U or D in a string.
inline int nth(const std::string& s, char c, int k) {
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i] == c && --k == 0) return i;
  return -1;
}

inline bool compatible(const std::string& s, const std::vector<int>& A, const std::vector<int>& B) {
  for (int a : A) {
    int p = nth(s, 'U', a);
    if (p < 0 || p + 2 >= static_cast<int>(s.size()) || s.compare(p, 3, "UUD") != 0) return false;
  }
  for (int b : B) {
    int p = nth(s, 'D', b);
    if (p < 1 || p + 1 >= static_cast<int>(s.size()) || s.compare(p - 1, 3, "UDD") != 0) return false;
  }
  return true;
}

/// Orbit of a permutation under the restricted Foata-Strehl moves, found by
/// breadth-first search over psi_x for all x.
inline std::set<toricg::Permutation> psi_orbit(const toricg::Permutation& p) {
  std::set<toricg::Permutation> seen{p};
  std::vector<toricg::Permutation> todo{p};
  while (!todo.empty()) {
    auto q = todo.back();
    todo.pop_back();
    auto t = toricg::fs_tree(q);
    for (int x = 1; x <= q.size(); ++x) {
      auto r = toricg::fs_inorder(toricg::fs_psi(t, x));
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  return seen;
}

/// Component of x in the restriction of a building set (list of member sets) to t.
inline std::set<int> component(const std::vector<std::set<int>>& bs, const std::set<int>& t, int x) {
  std::set<int> comp{x};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : bs) {
      if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
      bool meets = std::any_of(s.begin(), s.end(), [&](int v) { return comp.count(v) > 0; });
      if (!meets) continue;
      for (int v : s) grew |= comp.insert(v).second;
    }
  }
  return comp;
}

inline bool b_permutation(const std::vector<std::set<int>>& bs, const std::vector<int>& p) {
  std::set<int> prefix;
  int mx = 0;
  for (int v : p) {
    prefix.insert(v);
    mx = std::max(mx, v);
    if (component(bs, prefix, mx).count(v) == 0) return false;
  }
  return true;
}

inline std::vector<std::set<int>> member_sets(const toricg::BuildingSet& bs) {
  std::vector<std::set<int>> out;
  for (const auto& s : bs.sets()) out.emplace_back(s.begin(), s.end());
  return out;
}

/// Increasing plane trees on `vertices` vertices with at most two children,
/// built from parent arrays: vertex v > 1 picks a parent among 1..v-1 and
/// the children order is any order of each child list.
inline long count_increasing_012(int vertices, std::vector<long>& by_forks) {
  by_forks.assign(vertices, 0);
  std::vector<int> parent(vertices + 1, 0);
  long total = 0;
  std::function<void(int)> go = [&](int v) {
    if (v > vertices) {
      std::vector<int> kids(vertices + 1, 0);
      for (int u = 2; u <= vertices; ++u) ++kids[parent[u]];
      long orders = 1;
      int forks = 0;
      for (int u = 1; u <= vertices; ++u) {
        if (kids[u] > 2) return;
        if (kids[u] == 2) {
          orders *= 2;
          ++forks;
        }
      }
      total += orders;
      by_forks[forks] += orders;
      return;
    }
    for (int p = 1; p < v; ++p) {
      parent[v] = p;
      go(v + 1);
    }
  };
  go(2);
  return total;
}

}  // namespace oracle
