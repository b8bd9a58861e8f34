#include "toricg/compat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace toricg {

namespace {

void check_sets(int n, const IntSet& A, const IntSet& B) {
  auto ok = [n](const IntSet& s) {
    return std::is_sorted(s.begin(), s.end()) && is_sparse(s) &&
           (s.empty() || (s.front() >= 1 && s.back() <= n - 1));
  };
  if (!ok(A) || !ok(B)) throw PreconditionError("A and B must be sparse subsets of [n-1]");
}

bool is_u(const Word& w, int p) { return p >= 0 && p < w.size() && w[p] == Letter::U; }
bool is_d(const Word& w, int p) { return p >= 0 && p < w.size() && w[p] == Letter::D; }

/// Index of the D at position p among all D's, 1-based.
int d_index(const Word& w, int p) {
  int k = 0;
  for (int i = 0; i <= p; ++i) k += w[i] == Letter::D;
  return k;
}

/// Position of a labeled letter with the boundary convention of the inverse
/// map: index 0 stands in front, an index past the end stands at the end.
int boundary_pos(const Word& w, Letter l, int k) {
  if (k <= 0) return -1;
  int p = w.position_of(l, k);
  return p < 0 ? w.size() : p;
}

/// w with the letters of ins placed before position p.
Word insert_at(const Word& w, int p, std::string_view ins) {
  Word out;
  for (int i = 0; i < p; ++i) out.push_back(w[i]);
  out.append(Word::parse(ins));
  for (int i = p; i < w.size(); ++i) out.push_back(w[i]);
  return out;
}

}  // namespace

bool is_compatible(const Word& w, const IntSet& A, const IntSet& B) {
  check_sets(w.size() / 2, A, B);
  for (int a : A) {
    int p = w.position_of(Letter::U, a);
    if (!is_u(w, p + 1) || !is_d(w, p + 2)) return false;
  }
  for (int b : B) {
    int p = w.position_of(Letter::D, b);
    if (!is_u(w, p - 1) || !is_d(w, p + 1)) return false;
  }
  return true;
}

Word compress(const Word& w, const IntSet& A, const IntSet& B) {
  if (!is_compatible(w, A, B)) throw PreconditionError("word is not (A,B)-compatible: " + w.str());
  std::vector<char> drop(w.size(), 0);
  std::vector<char> joint_b(w.size() / 2 + 2, 0);
  for (int a : A) {
    int p = w.position_of(Letter::U, a);
    int b = d_index(w, p + 2);
    if (std::binary_search(B.begin(), B.end(), b)) {
      drop[p] = drop[p + 1] = drop[p + 2] = drop[p + 3] = 1;
      joint_b[b] = 1;
    } else {
      drop[p + 1] = drop[p + 2] = 1;
    }
  }
  for (int b : B) {
    if (joint_b[b]) continue;
    int p = w.position_of(Letter::D, b);
    drop[p - 1] = drop[p] = 1;
  }
  Word out;
  for (int i = 0; i < w.size(); ++i)
    if (!drop[i]) out.push_back(w[i]);
  return out;
}

Word expand(const Word& w, int n, const IntSet& A, const IntSet& B) {
  check_sets(n, A, B);
  if (w.size() != 2 * (n - static_cast<int>(A.size() + B.size())))
    throw PreconditionError("word has the wrong semilength for expansion");
  if (A.empty() && B.empty()) return w;
  IntSet rest_a(A.begin() + (A.empty() ? 0 : 1), A.end());
  IntSet rest_b(B.begin() + (B.empty() ? 0 : 1), B.end());
  if (B.empty()) {
    int p = w.position_of(Letter::U, A.front());
    return expand(insert_at(w, p + 1, "UD"), n, rest_a, B);
  }
  if (A.empty()) {
    int p = w.position_of(Letter::D, B.front());
    return expand(insert_at(insert_at(w, p + 1, "D"), p, "U"), n, A, rest_b);
  }
  int a = A.front();
  int b = B.front();
  int ua = boundary_pos(w, Letter::U, a);
  int ua1 = boundary_pos(w, Letter::U, a - 1);
  int db = boundary_pos(w, Letter::D, b);
  int db1 = boundary_pos(w, Letter::D, b - 1);
  if (ua < db1) return expand(insert_at(w, ua + 1, "UD"), n, rest_a, B);
  if (db < ua1) return expand(insert_at(insert_at(w, db + 1, "D"), db, "U"), n, A, rest_b);
  return expand(insert_at(w, std::min(ua, db), "UUDD"), n, rest_a, rest_b);
}

BigInt count_compatible(int n, const IntSet& A, const IntSet& B, CompatKind kind) {
  check_sets(n, A, B);
  BigInt count = 0;
  for_each_word(n, kind == CompatKind::dyck ? WordKind::dyck() : WordKind::balanced(),
                [&](const Word& w) { count += is_compatible(w, A, B) ? 1 : 0; });
  return count;
}

NoncrossingPartition::NoncrossingPartition(std::vector<IntSet> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw StructuralError("empty block");
    std::sort(b.begin(), b.end());
    n_ += static_cast<int>(b.size());
  }
  std::sort(blocks_.begin(), blocks_.end());
  block_of_.assign(n_ + 1, -1);
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (int i : blocks_[k]) {
      if (i < 1 || i > n_ || block_of_[i] != -1) throw StructuralError("blocks do not partition [n]");
      block_of_[i] = static_cast<int>(k);
    }
  // a < b < c < d with a, c in one block and b, d in another
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b) {
      if (block_of_[a] == block_of_[b]) continue;
      for (int c = b + 1; c <= n_; ++c) {
        if (block_of_[c] != block_of_[a]) continue;
        for (int d = c + 1; d <= n_; ++d)
          if (block_of_[d] == block_of_[b]) throw StructuralError("crossing blocks: " + str());
      }
    }
}

NoncrossingPartition NoncrossingPartition::parse(const std::string& text) {
  std::vector<IntSet> blocks;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) blocks.push_back(parse_ints(part));
  return NoncrossingPartition(std::move(blocks));
}

int NoncrossingPartition::nonsingleton_blocks() const {
  return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [](const IntSet& b) { return b.size() > 1; }));
}

std::string NoncrossingPartition::str() const {
  std::string out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) out += '|';
    out += join_ints(blocks_[k], ",");
  }
  return out;
}

NoncrossingPartition dyck_to_nc(const Word& w) {
  if (!w.is_dyck()) throw StructuralError("not a Dyck word: " + w.str());
  int n = w.size() / 2;
  std::vector<int> label(w.size(), 0);
  std::vector<int> open;
  int next_d = n;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::U) {
      open.push_back(i);
    } else {
      label[i] = next_d;
      label[open.back()] = next_d;
      open.pop_back();
      --next_d;
    }
  }
  std::vector<IntSet> blocks;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] != Letter::U) continue;
    if (i == 0 || w[i - 1] != Letter::U) blocks.emplace_back();
    blocks.back().push_back(label[i]);
  }
  return NoncrossingPartition(std::move(blocks));
}

Word nc_to_dyck(const NoncrossingPartition& p) {
  // Build the mirror image, where U steps carry 1..n left to right and each
  // block closes right after its maximum.
  Word mirror;
  for (int i = 1; i <= p.size(); ++i) {
    mirror.push_back(Letter::U);
    const IntSet& b = p.blocks()[p.block_of(i)];
    if (b.back() == i)
      for (std::size_t k = 0; k < b.size(); ++k) mirror.push_back(Letter::D);
  }
  return mirror.mirrored();
}

IntSet fillers(const NoncrossingPartition& p) {
  IntSet out;
  for (int i = 2; i <= p.size(); ++i) {
    const IntSet& bi = p.blocks()[p.block_of(i)];
    const IntSet& bprev = p.blocks()[p.block_of(i - 1)];
    bool largest_with_prev = bi.back() == i && p.block_of(i - 1) == p.block_of(i);
    bool singleton_after_open = bi.size() == 1 && bprev.back() != i - 1;
    if (largest_with_prev || singleton_after_open) out.push_back(i);
  }
  return out;
}

void for_each_nc_partition(int n, const std::function<void(const NoncrossingPartition&)>& visit) {
  for_each_word(n, WordKind::dyck(), [&](const Word& w) { visit(dyck_to_nc(w)); });
}

BigInt nc_complex_faces(int n, int k) {
  if (k < 0) throw PreconditionError("negative face size");
  std::set<std::vector<IntSet>> faces;
  for_each_nc_partition(n, [&](const NoncrossingPartition& p) {
    std::vector<IntSet> face;
    for (const auto& b : p.blocks())
      if (b.size() > 1) face.push_back(b);
    if (static_cast<int>(face.size()) == k) faces.insert(std::move(face));
  });
  return faces.size();
}

}  // namespace toricg
