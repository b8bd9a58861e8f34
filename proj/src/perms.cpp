#include "toricg/perms.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace toricg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v])
      throw StructuralError("not a permutation: " + join_ints(images_, " "));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) { return Permutation(parse_ints(text)); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

DescentProfile asc_des(const Permutation& p) {
  DescentProfile d;
  int n = p.size();
  for (int i = 1; i < n; ++i) (p(i) < p(i + 1) ? d.ascents : d.descents).push_back(i);
  for (int i = 2; i < n; ++i) {
    bool up_in = p(i - 1) < p(i);
    bool up_out = p(i) < p(i + 1);
    if (up_in && !up_out) d.peaks.push_back(i);
    else if (!up_in && up_out) d.valleys.push_back(i);
    else if (!up_in && !up_out) d.double_descents.push_back(i);
    else d.double_ascents.push_back(i);
  }
  return d;
}

int des(const Permutation& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i) c += p(i) > p(i + 1);
  return c;
}

int asc(const Permutation& p) { return p.size() == 0 ? 0 : p.size() - 1 - des(p); }

bool has_final_descent(const Permutation& p) {
  int n = p.size();
  return n >= 2 && p(n - 1) > p(n);
}

bool has_double_descent(const Permutation& p) {
  for (int i = 2; i < p.size(); ++i)
    if (p(i - 1) > p(i) && p(i) > p(i + 1)) return true;
  return false;
}

bool is_123_avoiding(const Permutation& p) {
  int min_so_far = INT_MAX;
  int last_other = INT_MAX;
  for (int v : p.images()) {
    if (v < min_so_far) {
      min_so_far = v;
    } else {
      if (v > last_other) return false;
      last_other = v;
    }
  }
  return true;
}

bool is_312_avoiding(const Permutation& p) {
  int n = p.size();
  // prefix_max[j] = max of p(1..j-1)
  std::vector<int> prefix_max(n + 1, 0);
  for (int j = 2; j <= n; ++j) prefix_max[j] = std::max(prefix_max[j - 1], p(j - 1));
  for (int j = 2; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      if (p(j) < p(k) && prefix_max[j] > p(k)) return false;
  return true;
}

IntSet left_to_right_minima_positions(const Permutation& p) {
  IntSet pos;
  int m = INT_MAX;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) < m) {
      m = p(i);
      pos.push_back(i);
    }
  }
  return pos;
}

Word krattenthaler(const Permutation& p) {
  if (!is_123_avoiding(p)) throw PreconditionError("permutation is not 123-avoiding: " + p.str());
  Word w;
  int next_up = p.size();  // label of the next U step
  int min_so_far = INT_MAX;
  for (int i = 1; i <= p.size(); ++i) {
    int v = p(i);
    if (v < min_so_far) {
      min_so_far = v;
      for (; next_up >= v; --next_up) w.push_back(Letter::U);
    }
    w.push_back(Letter::D);
  }
  return w;
}

Permutation krattenthaler_inverse(const Word& w) {
  if (!w.is_dyck()) throw StructuralError("not a Dyck word: " + w.str());
  int n = w.size() / 2;
  // Peaks carry the left-to-right minima; each run of D's after a peak
  // holds its minimum followed by (run length - 1) non-minima.
  std::vector<int> minima;
  std::vector<int> tail_sizes;
  int up_label = n + 1;
  int i = 0;
  while (i < w.size()) {
    while (i < w.size() && w[i] == Letter::U) {
      --up_label;
      ++i;
    }
    int run = 0;
    while (i < w.size() && w[i] == Letter::D) {
      ++run;
      ++i;
    }
    minima.push_back(up_label);
    tail_sizes.push_back(run - 1);
  }
  std::vector<char> is_min(n + 1, 0);
  for (int m : minima) is_min[m] = 1;
  std::vector<int> others;
  for (int v = n; v >= 1; --v)
    if (!is_min[v]) others.push_back(v);
  std::vector<int> images;
  std::size_t next_other = 0;
  for (std::size_t b = 0; b < minima.size(); ++b) {
    images.push_back(minima[b]);
    for (int k = 0; k < tail_sizes[b]; ++k) images.push_back(others.at(next_other++));
  }
  Permutation p(std::move(images));
  if (krattenthaler(p) != w) throw StructuralError("word is not in the image of the bijection: " + w.str());
  return p;
}

namespace {

// Tracks the smallest value that ends an ascending pair in the prefix; a new
// value above it would complete a 123 pattern.
void gen_123(int n, std::vector<int>& cur, std::vector<char>& used, int min_so_far,
             int min_pair_top, const std::function<void(const Permutation&)>& visit) {
  if (static_cast<int>(cur.size()) == n) {
    visit(Permutation(cur));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v] || v > min_pair_top) continue;
    int new_top = v > min_so_far ? std::min(min_pair_top, v) : min_pair_top;
    used[v] = 1;
    cur.push_back(v);
    gen_123(n, cur, used, std::min(min_so_far, v), new_top, visit);
    cur.pop_back();
    used[v] = 0;
  }
}

}  // namespace

void for_each_123_avoiding(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> cur;
  std::vector<char> used(n + 1, 0);
  gen_123(n, cur, used, INT_MAX, INT_MAX, visit);
}

std::vector<Permutation> enumerate_123_avoiding(int n) {
  std::vector<Permutation> out;
  for_each_123_avoiding(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

void FSTree::set_left(int v, int c) {
  left_.at(v) = c;
  if (c) parent_.at(c) = v;
}

void FSTree::set_right(int v, int c) {
  right_.at(v) = c;
  if (c) parent_.at(c) = v;
}

void FSTree::swap_children(int v) { std::swap(left_.at(v), right_.at(v)); }

int FSTree::fork_count() const {
  int c = 0;
  for (int v = 1; v <= size(); ++v) c += child_count(v) == 2;
  return c;
}

namespace {

void fs_str(const FSTree& t, int v, std::ostringstream& os) {
  os << '(' << v;
  if (t.left(v)) {
    os << " L";
    fs_str(t, t.left(v), os);
  }
  if (t.right(v)) {
    os << " R";
    fs_str(t, t.right(v), os);
  }
  os << ')';
}

int fs_build(const std::vector<int>& a, int lo, int hi, FSTree& t) {
  if (lo >= hi) return 0;
  int m = lo;
  for (int i = lo + 1; i < hi; ++i)
    if (a[i] < a[m]) m = i;
  int v = a[m];
  t.set_left(v, fs_build(a, lo, m, t));
  t.set_right(v, fs_build(a, m + 1, hi, t));
  return v;
}

void fs_walk(const FSTree& t, int v, std::vector<int>& out) {
  if (!v) return;
  fs_walk(t, t.left(v), out);
  out.push_back(v);
  fs_walk(t, t.right(v), out);
}

}  // namespace

std::string FSTree::str() const {
  std::ostringstream os;
  if (root_) fs_str(*this, root_, os);
  else os << "()";
  return os.str();
}

FSTree fs_tree(const Permutation& p) {
  FSTree t(p.size());
  t.set_root(fs_build(p.images(), 0, p.size(), t));
  return t;
}

Permutation fs_inorder(const FSTree& t) {
  std::vector<int> out;
  fs_walk(t, t.root(), out);
  return Permutation(std::move(out));
}

FSTree fs_phi(const FSTree& t, int x) {
  if (x < 1 || x > t.size()) throw PreconditionError("unknown vertex label " + std::to_string(x));
  FSTree r = t;
  r.swap_children(x);
  return r;
}

FSTree fs_psi(const FSTree& t, int x) {
  if (x < 1 || x > t.size()) throw PreconditionError("unknown vertex label " + std::to_string(x));
  return t.child_count(x) == 1 ? fs_phi(t, x) : t;
}

bool is_right_adjusted(const FSTree& t) {
  for (int v = 1; v <= t.size(); ++v)
    if (t.left(v) && !t.right(v)) return false;
  return true;
}

FSTree right_adjust(const FSTree& t) {
  FSTree r = t;
  for (int v = 1; v <= t.size(); ++v)
    if (r.left(v) && !r.right(v)) r.swap_children(v);
  return r;
}

Permutation right_adjusted_rep(const Permutation& p) { return fs_inorder(right_adjust(fs_tree(p))); }

int PlaneTree::fork_count() const {
  int c = 0;
  for (std::size_t v = 1; v < children.size(); ++v) c += children[v].size() >= 2;
  return c;
}

int PlaneTree::max_children() const {
  std::size_t m = 0;
  for (std::size_t v = 1; v < children.size(); ++v) m = std::max(m, children[v].size());
  return static_cast<int>(m);
}

bool PlaneTree::is_increasing() const {
  int n = vertex_count();
  std::vector<int> parent_count(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    for (int c : children[v]) {
      if (c <= v || c > n) return false;
      ++parent_count[c];
    }
  for (int v = 2; v <= n; ++v)
    if (parent_count[v] != 1) return false;
  return n == 0 || parent_count[1] == 0;
}

FSTree to_fs_tree(const PlaneTree& t) {
  if (t.max_children() > 2) throw PreconditionError("not a 0-1-2 tree");
  int n = t.vertex_count();
  FSTree f(n);
  if (n) f.set_root(1);
  for (int v = 1; v <= n; ++v) {
    const auto& ch = t.children[v];
    if (ch.size() == 1) {
      f.set_right(v, ch[0]);
    } else if (ch.size() == 2) {
      f.set_left(v, ch[0]);
      f.set_right(v, ch[1]);
    }
  }
  return f;
}

PlaneTree to_plane_tree(const FSTree& t) {
  PlaneTree p(t.size());
  for (int v = 1; v <= t.size(); ++v) {
    if (t.left(v)) p.children[v].push_back(t.left(v));
    if (t.right(v)) p.children[v].push_back(t.right(v));
  }
  return p;
}

namespace {

void gen_012(PlaneTree& t, int next, int vertices, const std::function<void(const PlaneTree&)>& visit) {
  if (next > vertices) {
    visit(t);
    return;
  }
  for (int v = 1; v < next; ++v) {
    auto& ch = t.children[v];
    if (ch.size() >= 2) continue;
    for (std::size_t slot = 0; slot <= ch.size(); ++slot) {
      ch.insert(ch.begin() + static_cast<std::ptrdiff_t>(slot), next);
      gen_012(t, next + 1, vertices, visit);
      ch.erase(ch.begin() + static_cast<std::ptrdiff_t>(slot));
    }
  }
}

}  // namespace

void for_each_increasing_012(int vertices, const std::function<void(const PlaneTree&)>& visit) {
  if (vertices < 1) throw PreconditionError("a tree needs at least one vertex");
  PlaneTree t(vertices);
  gen_012(t, 2, vertices, visit);
}

std::vector<PlaneTree> enumerate_increasing_012(int vertices) {
  std::vector<PlaneTree> out;
  for_each_increasing_012(vertices, [&](const PlaneTree& t) { out.push_back(t); });
  return out;
}

}  // namespace toricg
