#include "toricg/words.hpp"

#include <cctype>

namespace toricg {

char to_char(Letter l) {
  switch (l) {
    case Letter::U: return 'U';
    case Letter::D: return 'D';
    case Letter::H: return 'H';
  }
  return '?';
}

namespace {

Letter letter_from_char(char c) {
  switch (c) {
    case 'U': return Letter::U;
    case 'D': return Letter::D;
    case 'H': return Letter::H;
    default: throw ParseError(std::string("unknown letter '") + c + "'");
  }
}

}  // namespace

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Letter l = letter_from_char(c);
    ++i;
    int reps = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("exponent expected after '^'");
      reps = std::stoi(std::string(text.substr(start, i - start)));
    }
    for (int r = 0; r < reps; ++r) w.push_back(l);
  }
  return w;
}

void Word::push_back(Letter l) {
  if (len_ >= kMaxLength) throw CapacityError("word longer than 64 letters");
  std::uint64_t bit = std::uint64_t{1} << len_;
  if (l == Letter::D) d_ |= bit;
  if (l == Letter::H) h_ |= bit;
  ++len_;
}

void Word::pop_back() {
  if (len_ == 0) return;
  --len_;
  std::uint64_t mask = ~(std::uint64_t{1} << len_);
  d_ &= mask;
  h_ &= mask;
}

void Word::append(const Word& w) {
  for (int i = 0; i < w.size(); ++i) push_back(w[i]);
}

int Word::count(Letter l) const {
  int c = 0;
  for (int i = 0; i < len_; ++i) c += (*this)[i] == l;
  return c;
}

bool Word::is_balanced() const {
  return has_only_ud() && 2 * count(Letter::D) == len_;
}

bool Word::is_dyck() const {
  if (!has_only_ud()) return false;
  int h = 0;
  for (int i = 0; i < len_; ++i) {
    h += (*this)[i] == Letter::U ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

bool Word::is_motzkin() const {
  int h = 0;
  for (int i = 0; i < len_; ++i) {
    Letter l = (*this)[i];
    if (l == Letter::U) ++h;
    if (l == Letter::D) --h;
    if (h < 0) return false;
  }
  return h == 0;
}

int Word::position_of(Letter l, int k) const {
  if (k <= 0) return -1;
  for (int i = 0; i < len_; ++i)
    if ((*this)[i] == l && --k == 0) return i;
  return -1;
}

Word Word::reversed() const {
  Word r;
  for (int i = len_ - 1; i >= 0; --i) r.push_back((*this)[i]);
  return r;
}

Word Word::mirrored() const {
  Word r;
  for (int i = len_ - 1; i >= 0; --i) {
    Letter l = (*this)[i];
    if (l == Letter::U) l = Letter::D;
    else if (l == Letter::D) l = Letter::U;
    r.push_back(l);
  }
  return r;
}

Word Word::slice(int from, int to) const {
  Word r;
  for (int i = from; i < to && i < len_; ++i) r.push_back((*this)[i]);
  return r;
}

std::string Word::str() const {
  std::string s;
  s.reserve(len_);
  for (int i = 0; i < len_; ++i) s.push_back(to_char((*this)[i]));
  return s;
}

std::string Word::run_length_str() const {
  std::string s;
  int i = 0;
  while (i < len_) {
    Letter l = (*this)[i];
    int j = i;
    while (j < len_ && (*this)[j] == l) ++j;
    if (!s.empty()) s.push_back(' ');
    s.push_back(to_char(l));
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  int n = a.len_ < b.len_ ? a.len_ : b.len_;
  for (int i = 0; i < n; ++i) {
    auto la = static_cast<int>(a[i]);
    auto lb = static_cast<int>(b[i]);
    if (la != lb) return la <=> lb;
  }
  return a.len_ <=> b.len_;
}

BigInt motzkin(int n) {
  BigInt m = 0;
  for (int j = 0; 2 * j <= n; ++j) m += binomial(n, 2 * j) * catalan(j);
  return m;
}

BigInt catalan_triangle(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n) return 0;
  return binomial(n, k) - binomial(n, k - 1);
}

namespace {

// Depth-first generation with U tried before D gives lexicographic order.
void gen_words(Word& cur, int ups_left, int downs_left, int height, bool nonneg,
               const std::function<void(const Word&)>& visit) {
  if (ups_left == 0 && downs_left == 0) {
    visit(cur);
    return;
  }
  if (ups_left > 0) {
    cur.push_back(Letter::U);
    gen_words(cur, ups_left - 1, downs_left, height + 1, nonneg, visit);
    cur.pop_back();
  }
  if (downs_left > 0 && (!nonneg || height > 0)) {
    cur.push_back(Letter::D);
    gen_words(cur, ups_left, downs_left - 1, height - 1, nonneg, visit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_word(int n, WordKind kind, const std::function<void(const Word&)>& visit) {
  if (n < 0) throw PreconditionError("negative word size");
  Word cur;
  switch (kind.tag) {
    case WordKind::Tag::dyck:
      gen_words(cur, n, n, 0, true, visit);
      break;
    case WordKind::Tag::balanced:
      gen_words(cur, n, n, 0, false, visit);
      break;
    case WordKind::Tag::nonneg_to_height: {
      int h = kind.height;
      if (h < 0 || h > n || (n - h) % 2 != 0)
        throw PreconditionError("height must be in [0, n] with the parity of n");
      int downs = (n - h) / 2;
      gen_words(cur, n - downs, downs, 0, true, visit);
      break;
    }
  }
}

std::vector<Word> enumerate_words(int n, WordKind kind) {
  std::vector<Word> out;
  for_each_word(n, kind, [&](const Word& w) { out.push_back(w); });
  return out;
}

int factor_count(const Word& w, const Word& f) {
  if (f.empty()) throw PreconditionError("factor must be nonempty");
  int c = 0;
  for (int i = 0; i + f.size() <= w.size(); ++i) {
    bool match = true;
    for (int j = 0; j < f.size() && match; ++j) match = w[i + j] == f[j];
    c += match;
  }
  return c;
}

int factor_count(const Word& w, std::string_view f) { return factor_count(w, Word::parse(f)); }

bool is_lukasiewicz(const LukasiewiczWord& v) {
  if (v.empty()) return false;
  long long weight = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) return false;
    weight += v[k] - 1;
    if (k + 1 < v.size() && weight < 0) return false;
  }
  return weight == -1;
}

std::vector<int> up_runs(const Word& w) {
  if (!w.is_balanced()) throw StructuralError("word is not balanced: " + w.str());
  if (!w.empty() && w[w.size() - 1] != Letter::D)
    throw StructuralError("word does not end with D: " + w.str());
  std::vector<int> q;
  int run = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::U) {
      ++run;
    } else {
      q.push_back(run);
      run = 0;
    }
  }
  return q;
}

Word word_from_up_runs(const std::vector<int>& q) {
  Word w;
  for (int r : q) {
    for (int i = 0; i < r; ++i) w.push_back(Letter::U);
    w.push_back(Letter::D);
  }
  return w;
}

LukasiewiczWord dyck_to_lukasiewicz(const Word& w) {
  if (!w.is_dyck()) throw StructuralError("not a Dyck word: " + w.str());
  LukasiewiczWord v = up_runs(w);
  v.push_back(0);
  return v;
}

Word lukasiewicz_to_dyck(const LukasiewiczWord& v) {
  if (!is_lukasiewicz(v)) throw StructuralError("not a Lukasiewicz word");
  std::vector<int> q(v.begin(), v.end() - 1);
  return word_from_up_runs(q);
}

Word dyck_to_motzkin(const Word& w) {
  std::vector<int> q = up_runs(w);
  Word m;
  for (int r : q) {
    switch (r) {
      case 0: m.push_back(Letter::D); break;
      case 1: m.push_back(Letter::H); break;
      case 2: m.push_back(Letter::U); break;
      default: throw StructuralError("word contains UUU: " + w.str());
    }
  }
  return m;
}

Word motzkin_to_dyck(const Word& m) {
  std::vector<int> q;
  for (int i = 0; i < m.size(); ++i) {
    switch (m[i]) {
      case Letter::U: q.push_back(2); break;
      case Letter::H: q.push_back(1); break;
      case Letter::D: q.push_back(0); break;
    }
  }
  Word w = word_from_up_runs(q);
  if (!w.is_balanced()) throw StructuralError("Motzkin word does not return to level 0: " + m.str());
  return w;
}

}  // namespace toricg
