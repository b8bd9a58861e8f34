#pragma once

#include "toricg/common.hpp"
#include "toricg/words.hpp"

#include <functional>
#include <string>
#include <vector>

namespace toricg {

/// A permutation of [n] in one-line notation, values 1-based.
class Permutation {
 public:
  Permutation() = default;
  /// Throws StructuralError unless images is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// "7 10 5 9 8 2 6 1 4 3"
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(images_.size()); }
  /// pi(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  std::string str() const { return join_ints(images_, " "); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Ascent/descent sets and the interior classification of each index.
struct DescentProfile {
  IntSet ascents;
  IntSet descents;
  IntSet peaks;
  IntSet valleys;
  IntSet double_descents;
  IntSet double_ascents;
};

DescentProfile asc_des(const Permutation& p);
int des(const Permutation& p);
int asc(const Permutation& p);
bool has_final_descent(const Permutation& p);
bool has_double_descent(const Permutation& p);

/// Linear time: the entries that are not left-to-right minima must decrease.
bool is_123_avoiding(const Permutation& p);
bool is_312_avoiding(const Permutation& p);
IntSet left_to_right_minima_positions(const Permutation& p);

/// Krattenthaler's bijection onto Dyck words. U steps carry labels n..1.
Word krattenthaler(const Permutation& p);
Permutation krattenthaler_inverse(const Word& w);

/// Streams the 123-avoiding permutations of [n] in lexicographic order.
void for_each_123_avoiding(int n, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_123_avoiding(int n);

/// Streams all of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

/// Increasing binary tree with explicit left and right slots.
///
/// Vertices carry the labels 1..n. Index 0 of the slot arrays is unused and
/// 0 in a slot means "no child".
class FSTree {
 public:
  FSTree() = default;
  explicit FSTree(int n) : left_(n + 1, 0), right_(n + 1, 0), parent_(n + 1, 0) {}

  int size() const { return static_cast<int>(left_.size()) - 1; }
  int root() const { return root_; }
  int left(int v) const { return left_.at(v); }
  int right(int v) const { return right_.at(v); }
  int parent(int v) const { return parent_.at(v); }
  int child_count(int v) const { return (left(v) != 0) + (right(v) != 0); }

  void set_root(int v) { root_ = v; }
  void set_left(int v, int c);
  void set_right(int v, int c);
  /// Exchange the left and right subtree of v.
  void swap_children(int v);

  int fork_count() const;

  /// "(1 L(2) R(3 L(4 ...) R(10 R(11))))"
  std::string str() const;

  friend bool operator==(const FSTree&, const FSTree&) = default;

 private:
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<int> parent_;
  int root_ = 0;
};

FSTree fs_tree(const Permutation& p);
Permutation fs_inorder(const FSTree& t);

FSTree fs_phi(const FSTree& t, int x);
/// phi_x when x has exactly one child, the identity otherwise.
FSTree fs_psi(const FSTree& t, int x);

bool is_right_adjusted(const FSTree& t);
/// Turns every only-left child into a right child.
FSTree right_adjust(const FSTree& t);
Permutation right_adjusted_rep(const Permutation& p);

/// Rooted plane tree with increasing vertex labels 1..N, root 1.
///
/// children[v] lists the children of v from left to right; index 0 unused.
struct PlaneTree {
  std::vector<std::vector<int>> children;

  PlaneTree() = default;
  explicit PlaneTree(int vertices) : children(vertices + 1) {}

  int vertex_count() const { return static_cast<int>(children.size()) - 1; }
  int fork_count() const;
  int max_children() const;
  bool is_increasing() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// Plane 0-1-2 tree -> right-adjusted Foata-Strehl tree (only child goes right).
FSTree to_fs_tree(const PlaneTree& t);
/// Forgets the left/right distinction of only children.
PlaneTree to_plane_tree(const FSTree& t);

/// Every increasing plane 0-1-2 tree on the given number of vertices.
///
/// Built by attaching the largest label as a new leaf; the order is
/// lexicographic in (parent label, slot) at each insertion step.
void for_each_increasing_012(int vertices, const std::function<void(const PlaneTree&)>& visit);
std::vector<PlaneTree> enumerate_increasing_012(int vertices);

}  // namespace toricg
