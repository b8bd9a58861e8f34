#pragma once

#include "toricg/common.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace toricg {

enum class Letter : std::uint8_t { U = 0, D = 1, H = 2 };

char to_char(Letter l);

/// A lattice-path word over {U, D, H}, packed into two bit planes.
///
/// Letter i is D when bit i of the D plane is set, H when bit i of the H
/// plane is set, and U otherwise. Words are limited to kMaxLength letters,
/// which is far beyond anything the exhaustive enumerations reach.
class Word {
 public:
  static constexpr int kMaxLength = 64;

  Word() = default;

  /// Parses "UUDD" or the run-length form "U^4 D^2 U D^3".
  static Word parse(std::string_view text);

  int size() const { return len_; }
  bool empty() const { return len_ == 0; }

  Letter operator[](int i) const {
    if ((d_ >> i) & 1U) return Letter::D;
    if ((h_ >> i) & 1U) return Letter::H;
    return Letter::U;
  }

  void push_back(Letter l);
  void pop_back();
  void append(const Word& w);

  int count(Letter l) const;
  bool is_balanced() const;
  bool is_dyck() const;
  bool has_only_ud() const { return h_ == 0; }
  bool is_motzkin() const;

  /// Position of the k-th (1-based) occurrence of l, or -1.
  int position_of(Letter l, int k) const;

  Word reversed() const;
  /// Reverse and exchange U with D: the mirror image of the path.
  Word mirrored() const;
  Word slice(int from, int to) const;

  std::string str() const;
  /// Run-length rendering, e.g. "U^4 D^2 U D^3".
  std::string run_length_str() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic with U < D < H.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::uint64_t d_ = 0;
  std::uint64_t h_ = 0;
  int len_ = 0;
};

BigInt motzkin(int n);

/// Number of nonnegative {U,D} paths of n steps from height 0 to height n-2k.
BigInt catalan_triangle(int n, int k);

struct WordKind {
  enum class Tag { dyck, balanced, nonneg_to_height };
  Tag tag = Tag::dyck;
  int height = 0;

  static WordKind dyck() { return {Tag::dyck, 0}; }
  static WordKind balanced() { return {Tag::balanced, 0}; }
  static WordKind nonneg_to_height(int h) { return {Tag::nonneg_to_height, h}; }
};

/// Streams every word of the given kind in lexicographic order (U < D).
///
/// For dyck and balanced, n is the semilength. For nonneg_to_height(h), n is
/// the number of steps and the words are nonnegative paths ending at height h.
void for_each_word(int n, WordKind kind, const std::function<void(const Word&)>& visit);

std::vector<Word> enumerate_words(int n, WordKind kind);

/// Number of (possibly overlapping) occurrences of f as a factor of w.
int factor_count(const Word& w, const Word& f);
int factor_count(const Word& w, std::string_view f);

/// Letters f_q are stored by their index q; the weight of f_q is q - 1.
using LukasiewiczWord = std::vector<int>;

bool is_lukasiewicz(const LukasiewiczWord& v);

/// Run lengths (q_1, ..., q_n) of a word U^{q_1} D ... U^{q_n} D.
/// Throws StructuralError when the word does not end in D or is not balanced.
std::vector<int> up_runs(const Word& w);
Word word_from_up_runs(const std::vector<int>& q);

LukasiewiczWord dyck_to_lukasiewicz(const Word& w);
Word lukasiewicz_to_dyck(const LukasiewiczWord& v);

/// UUD -> U, remaining UD -> H, remaining D -> D.
///
/// Accepts balanced {U,D} words ending in D without a UUU factor; on Dyck
/// input the image is a Motzkin path.
Word dyck_to_motzkin(const Word& w);
Word motzkin_to_dyck(const Word& m);

}  // namespace toricg
