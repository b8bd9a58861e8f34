#pragma once

#include "toricg/common.hpp"
#include "toricg/words.hpp"

#include <functional>
#include <string>
#include <vector>

namespace toricg {

// Labels on a Dyck word are positional: U_k is the k-th U from the left and
// D_k the k-th D. They are never stored, only recomputed from the word.

/// U_aU_{a+1}D is a factor for every a in A and UD_bD_{b+1} for every b in B.
/// Throws PreconditionError unless A and B are sparse subsets of [n-1].
bool is_compatible(const Word& w, const IntSet& A, const IntSet& B);

/// The compression map. Joint factors U_aU_{a+1}D_bD_{b+1} vanish, then
/// U_aU_{a+1}D becomes U and UD_bD_{b+1} becomes D.
Word compress(const Word& w, const IntSet& A, const IntSet& B);

/// Inverse of compress: rebuilds the (A,B)-compatible word of semilength n.
Word expand(const Word& w, int n, const IntSet& A, const IntSet& B);

enum class CompatKind { dyck, balanced };

/// Brute-force count of compatible words of semilength n.
BigInt count_compatible(int n, const IntSet& A, const IntSet& B, CompatKind kind);

/// Set partition of [n]; blocks sorted internally and ordered by minimum.
class NoncrossingPartition {
 public:
  NoncrossingPartition() = default;
  /// Normalizes the block order. Throws StructuralError unless the blocks
  /// partition [n] without a crossing.
  explicit NoncrossingPartition(std::vector<IntSet> blocks);

  /// "1,2|3|4"
  static NoncrossingPartition parse(const std::string& text);

  int size() const { return n_; }
  const std::vector<IntSet>& blocks() const { return blocks_; }
  /// Index into blocks() of the block containing i.
  int block_of(int i) const { return block_of_.at(i); }
  int nonsingleton_blocks() const;

  std::string str() const;

  friend bool operator==(const NoncrossingPartition& a, const NoncrossingPartition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<IntSet> blocks_;
  std::vector<int> block_of_;  // 1-based element -> block index
  int n_ = 0;
};

/// D steps labeled 1..n from right to left, labels moved to the matching U
/// steps, and maximal U runs read off as blocks.
NoncrossingPartition dyck_to_nc(const Word& w);
Word nc_to_dyck(const NoncrossingPartition& p);

IntSet fillers(const NoncrossingPartition& p);

/// In the order of the Dyck words they come from.
void for_each_nc_partition(int n, const std::function<void(const NoncrossingPartition&)>& visit);

/// Number of k-element collections of nonsingleton blocks that occur in a
/// noncrossing partition of [n].
BigInt nc_complex_faces(int n, int k);

}  // namespace toricg
