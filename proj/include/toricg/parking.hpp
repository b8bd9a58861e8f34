#pragma once

#include "toricg/common.hpp"
#include "toricg/config.hpp"
#include "toricg/perms.hpp"
#include "toricg/words.hpp"

#include <functional>
#include <string>
#include <vector>

namespace toricg {

/// A function f: [n] -> [n], stored 1-indexed as (f(1), ..., f(n)).
class FiniteFunction {
 public:
  FiniteFunction() = default;
  /// Throws StructuralError when a value falls outside [n].
  explicit FiniteFunction(std::vector<int> values);

  /// "7 5 10 7 3 6 1 4 3 1"
  static FiniteFunction parse(const std::string& text);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }
  std::string str() const { return join_ints(values_, " "); }

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;
  friend auto operator<=>(const FiniteFunction&, const FiniteFunction&) = default;

 private:
  std::vector<int> values_;
};

bool is_parking(const FiniteFunction& f);

/// No i1 < i2 < i3 with f(i1) <= f(i2) <= f(i3).
bool fn_is_123_avoiding(const FiniteFunction& f);
/// Weak ascents: positions i with f(i) <= f(i+1).
int fn_ascents(const FiniteFunction& f);

/// Streams every function [n] -> [n] in lexicographic order.
void for_each_function(int n, const std::function<void(const FiniteFunction&)>& visit);
/// Streams the 123-avoiding functions [n] -> [n] in lexicographic order.
void for_each_123_avoiding_function(int n, const std::function<void(const FiniteFunction&)>& visit);
/// Streams the 123-avoiding parking functions on [n] in lexicographic order.
void for_each_123_avoiding_parking(int n, const std::function<void(const FiniteFunction&)>& visit);

struct GHPair {
  Permutation perm;
  Word word;

  friend bool operator==(const GHPair&, const GHPair&) = default;
};

/// Des(perm) is contained in the partial sums of the up-runs of word.
bool gh_compatible(const Permutation& perm, const Word& word);

GHPair garsia_haiman(const FiniteFunction& f);
FiniteFunction garsia_haiman_inverse(const GHPair& pair);

/// Rooted plane tree on n+1 vertices with increasing vertex labels and
/// edge labels from [n] that increase left to right among siblings.
class ParkingTree {
 public:
  struct Edge {
    int child;
    int label;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  ParkingTree() = default;
  explicit ParkingTree(int edges) : children_(edges + 2) {}

  /// Throws StructuralError when either labeling condition fails.
  void validate() const;

  int edge_count() const { return static_cast<int>(children_.size()) - 2; }
  int vertex_count() const { return edge_count() + 1; }
  const std::vector<Edge>& children(int v) const { return children_.at(v); }
  void add_child(int parent, int child, int label) { children_.at(parent).push_back({child, label}); }

  PlaneTree shape() const;

  /// "(v=1 [e=7 (v=2)] [e=10 (v=3 ...)])"
  std::string str() const;
  static ParkingTree parse(const std::string& text);

  friend bool operator==(const ParkingTree&, const ParkingTree&) = default;

 private:
  std::vector<std::vector<Edge>> children_;  // index 0 unused
};

FiniteFunction tree_to_function(const ParkingTree& t);
ParkingTree dfs_tree(const FiniteFunction& f);
ParkingTree bfs_tree(const FiniteFunction& f);
/// Edge labels grouped by parent label, each group left to right.
Permutation edge_perm(const ParkingTree& t);
bool is_123_parking_tree(const ParkingTree& t);

/// Labels the edges of a vertex-labeled plane tree so the edge permutation
/// is the given one.
ParkingTree with_edge_labels(const PlaneTree& shape, const Permutation& pi);

/// B = {b : edges b and b+1 share a parent} under the identity edge labeling.
IntSet sibling_type(const PlaneTree& t);
/// U for a fork, D for a leaf, H otherwise, over vertices 1..n.
Word tree_motzkin_word(const PlaneTree& t);

/// Vertices labeled after visiting the first i vertices in BFS label order,
/// for i = 0..N-1.
std::vector<int> bfs_labeled_counts(const PlaneTree& t);

/// Streams all (n!)^2 parking trees on n+1 vertices.
///
/// Order: increasing plane trees as produced by inserting the largest
/// label at (parent, slot) positions, then edge permutations in
/// lexicographic order. Throws CapacityError past the configured bound.
void for_each_parking_tree(int n, const std::function<void(const ParkingTree&)>& visit,
                           int max_n = kDefaultLimits.parking_trees);

/// Streams every increasing plane tree (no child bound) on the given
/// number of vertices, in the insertion order described above.
void for_each_increasing_plane_tree(int vertices, const std::function<void(const PlaneTree&)>& visit);

/// Streams the edge permutations compatible with a tree shape: the labels
/// on sibling edges increase left to right. With avoid_123 set only the
/// 123-avoiding ones are produced.
void for_each_edge_labeling(const PlaneTree& shape, bool avoid_123,
                            const std::function<void(const Permutation&)>& visit);

}  // namespace toricg
