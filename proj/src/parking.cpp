#include "toricg/parking.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <deque>
#include <sstream>

namespace toricg {

FiniteFunction::FiniteFunction(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_)
    if (v < 1 || v > size())
      throw StructuralError("value out of range [n]: " + join_ints(values_, " "));
}

FiniteFunction FiniteFunction::parse(const std::string& text) { return FiniteFunction(parse_ints(text)); }

bool is_parking(const FiniteFunction& f) {
  int n = f.size();
  std::vector<int> fiber(n + 1, 0);
  for (int v : f.values()) ++fiber[v];
  int acc = 0;
  for (int k = 1; k <= n; ++k) {
    acc += fiber[k];
    if (acc < k) return false;
  }
  return true;
}

bool fn_is_123_avoiding(const FiniteFunction& f) {
  int min_so_far = INT_MAX;
  int min_pair_top = INT_MAX;  // smallest b with some earlier a <= b
  for (int v : f.values()) {
    if (v >= min_pair_top) return false;
    if (v >= min_so_far) min_pair_top = std::min(min_pair_top, v);
    min_so_far = std::min(min_so_far, v);
  }
  return true;
}

int fn_ascents(const FiniteFunction& f) {
  int c = 0;
  for (int i = 1; i < f.size(); ++i) c += f(i) <= f(i + 1);
  return c;
}

namespace {

void gen_functions(int n, std::vector<int>& cur, bool avoid_123, bool parking, int min_so_far,
                   int min_pair_top, const std::function<void(const FiniteFunction&)>& visit) {
  if (static_cast<int>(cur.size()) == n) {
    FiniteFunction f(cur);
    if (!parking || is_parking(f)) visit(f);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (avoid_123 && v >= min_pair_top) break;
    int top = v >= min_so_far ? std::min(min_pair_top, v) : min_pair_top;
    cur.push_back(v);
    gen_functions(n, cur, avoid_123, parking, std::min(min_so_far, v), top, visit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_function(int n, const std::function<void(const FiniteFunction&)>& visit) {
  std::vector<int> cur;
  gen_functions(n, cur, false, false, INT_MAX, INT_MAX, visit);
}

void for_each_123_avoiding_function(int n, const std::function<void(const FiniteFunction&)>& visit) {
  std::vector<int> cur;
  gen_functions(n, cur, true, false, INT_MAX, INT_MAX, visit);
}

void for_each_123_avoiding_parking(int n, const std::function<void(const FiniteFunction&)>& visit) {
  std::vector<int> cur;
  gen_functions(n, cur, true, true, INT_MAX, INT_MAX, visit);
}

bool gh_compatible(const Permutation& perm, const Word& word) {
  std::vector<int> q = up_runs(word);
  if (static_cast<int>(q.size()) != perm.size()) return false;
  std::vector<char> allowed(perm.size() + 1, 0);
  int acc = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    acc += q[i];
    allowed[acc] = 1;
  }
  for (int d : asc_des(perm).descents)
    if (!allowed[d]) return false;
  return true;
}

GHPair garsia_haiman(const FiniteFunction& f) {
  int n = f.size();
  std::vector<std::vector<int>> fibers(n + 1);
  for (int i = 1; i <= n; ++i) fibers[f(i)].push_back(i);
  std::vector<int> images;
  Word w;
  for (int v = 1; v <= n; ++v) {
    for (int i : fibers[v]) {
      images.push_back(i);
      w.push_back(Letter::U);
    }
    w.push_back(Letter::D);
  }
  return {Permutation(std::move(images)), w};
}

FiniteFunction garsia_haiman_inverse(const GHPair& pair) {
  if (!gh_compatible(pair.perm, pair.word))
    throw PreconditionError("permutation and word are not compatible");
  std::vector<int> q = up_runs(pair.word);
  std::vector<int> values(pair.perm.size());
  int pos = 1;
  for (std::size_t v = 0; v < q.size(); ++v)
    for (int k = 0; k < q[v]; ++k) values[pair.perm(pos++) - 1] = static_cast<int>(v) + 1;
  return FiniteFunction(std::move(values));
}

void ParkingTree::validate() const {
  int n = edge_count();
  int verts = vertex_count();
  std::vector<int> seen_vertex(verts + 1, 0);
  std::vector<int> seen_edge(n + 1, 0);
  for (int v = 1; v <= verts; ++v) {
    int last_label = 0;
    for (const Edge& e : children_[v]) {
      if (e.child <= v || e.child > verts)
        throw StructuralError("vertex labels must increase from parent to child");
      if (e.label < 1 || e.label > n) throw StructuralError("edge label out of range");
      if (e.label <= last_label) throw StructuralError("sibling edge labels must increase left to right");
      last_label = e.label;
      ++seen_vertex[e.child];
      ++seen_edge[e.label];
    }
  }
  for (int v = 2; v <= verts; ++v)
    if (seen_vertex[v] != 1) throw StructuralError("vertex " + std::to_string(v) + " is not attached once");
  for (int e = 1; e <= n; ++e)
    if (seen_edge[e] != 1) throw StructuralError("edge label " + std::to_string(e) + " is not used once");
}

PlaneTree ParkingTree::shape() const {
  PlaneTree t(vertex_count());
  for (int v = 1; v <= vertex_count(); ++v)
    for (const Edge& e : children_[v]) t.children[v].push_back(e.child);
  return t;
}

namespace {

void tree_str(const ParkingTree& t, int v, std::ostringstream& os) {
  os << "(v=" << v;
  for (const auto& e : t.children(v)) {
    os << " [e=" << e.label << ' ';
    tree_str(t, e.child, os);
    os << ']';
  }
  os << ')';
}

class TreeParser {
 public:
  explicit TreeParser(const std::string& s) : s_(s) {}

  ParkingTree run() {
    std::vector<std::tuple<int, int, int>> edges;  // parent, child, label
    int root = node(edges);
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    if (root != 1) fail("root must carry label 1");
    ParkingTree t(static_cast<int>(edges.size()));
    for (auto [p, c, l] : edges) {
      if (p < 1 || p > t.vertex_count() || c < 1 || c > t.vertex_count()) fail("vertex label out of range");
      t.add_child(p, c, l);
    }
    t.validate();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parking tree, offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) != 0) fail("expected '" + tok + "'");
    pos_ += tok.size();
  }
  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  int node(std::vector<std::tuple<int, int, int>>& edges) {
    expect("(");
    expect("v=");
    int v = integer();
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == '[') {
      ++pos_;
      expect("e=");
      int label = integer();
      int child = node(edges);
      edges.emplace_back(v, child, label);
      expect("]");
      skip_ws();
    }
    expect(")");
    return v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string ParkingTree::str() const {
  std::ostringstream os;
  tree_str(*this, 1, os);
  return os.str();
}

ParkingTree ParkingTree::parse(const std::string& text) { return TreeParser(text).run(); }

FiniteFunction tree_to_function(const ParkingTree& t) {
  std::vector<int> values(t.edge_count(), 0);
  for (int v = 1; v <= t.vertex_count(); ++v)
    for (const auto& e : t.children(v)) values[e.label - 1] = v;
  return FiniteFunction(std::move(values));
}

Permutation edge_perm(const ParkingTree& t) {
  std::vector<int> images;
  for (int v = 1; v <= t.vertex_count(); ++v)
    for (const auto& e : t.children(v)) images.push_back(e.label);
  return Permutation(std::move(images));
}

ParkingTree with_edge_labels(const PlaneTree& shape, const Permutation& pi) {
  int n = shape.vertex_count() - 1;
  if (pi.size() != n) throw PreconditionError("edge permutation has the wrong size");
  ParkingTree t(n);
  int pos = 1;
  for (int v = 1; v <= shape.vertex_count(); ++v)
    for (int c : shape.children[v]) t.add_child(v, c, pi(pos++));
  return t;
}

namespace {

ParkingTree tree_from_runs(const FiniteFunction& f, bool breadth_first) {
  if (!is_parking(f)) throw PreconditionError("not a parking function: " + f.str());
  int n = f.size();
  GHPair gh = garsia_haiman(f);
  std::vector<int> q = up_runs(gh.word);
  q.push_back(0);  // vertex n+1 is a leaf
  PlaneTree shape(n + 1);
  int next = 1;
  if (breadth_first) {
    // Children of vertex v are labeled when v is visited; visits follow label order.
    for (int v = 1; v <= n + 1; ++v)
      for (int k = 0; k < q[v - 1]; ++k) shape.children[v].push_back(++next);
  } else {
    std::vector<std::pair<int, int>> stack{{1, 0}};  // vertex, children placed
    while (!stack.empty()) {
      auto& [v, placed] = stack.back();
      if (placed == q[v - 1]) {
        stack.pop_back();
        continue;
      }
      ++placed;
      int c = ++next;
      shape.children[v].push_back(c);
      stack.emplace_back(c, 0);
    }
  }
  return with_edge_labels(shape, gh.perm);
}

}  // namespace

ParkingTree dfs_tree(const FiniteFunction& f) { return tree_from_runs(f, false); }
ParkingTree bfs_tree(const FiniteFunction& f) { return tree_from_runs(f, true); }

bool is_123_parking_tree(const ParkingTree& t) {
  for (int v = 1; v <= t.vertex_count(); ++v)
    if (t.children(v).size() > 2) return false;
  return is_123_avoiding(edge_perm(t));
}

IntSet sibling_type(const PlaneTree& t) {
  if (t.max_children() > 2) throw PreconditionError("not a 0-1-2 tree");
  IntSet b;
  int label = 0;
  for (int v = 1; v <= t.vertex_count(); ++v) {
    if (t.children[v].size() == 2) b.push_back(label + 1);
    label += static_cast<int>(t.children[v].size());
  }
  return b;
}

Word tree_motzkin_word(const PlaneTree& t) {
  if (t.max_children() > 2) throw PreconditionError("not a 0-1-2 tree");
  Word w;
  for (int v = 1; v < t.vertex_count(); ++v) {
    switch (t.children[v].size()) {
      case 0: w.push_back(Letter::D); break;
      case 1: w.push_back(Letter::H); break;
      default: w.push_back(Letter::U); break;
    }
  }
  return w;
}

std::vector<int> bfs_labeled_counts(const PlaneTree& t) {
  std::vector<int> m{1};
  for (int v = 1; v < t.vertex_count(); ++v)
    m.push_back(m.back() + static_cast<int>(t.children[v].size()));
  return m;
}

namespace {

void gen_plane(PlaneTree& t, int next, int vertices, int max_children,
               const std::function<void(const PlaneTree&)>& visit) {
  if (next > vertices) {
    visit(t);
    return;
  }
  for (int v = 1; v < next; ++v) {
    auto& ch = t.children[v];
    if (max_children > 0 && static_cast<int>(ch.size()) >= max_children) continue;
    for (std::size_t slot = 0; slot <= ch.size(); ++slot) {
      ch.insert(ch.begin() + static_cast<std::ptrdiff_t>(slot), next);
      gen_plane(t, next + 1, vertices, max_children, visit);
      ch.erase(ch.begin() + static_cast<std::ptrdiff_t>(slot));
    }
  }
}

struct LabelingState {
  std::vector<int> block_of_pos;  // parent vertex of each edge slot
  std::vector<int> cur;
  std::vector<char> used;
  bool avoid_123;
};

void gen_labels(LabelingState& s, int min_so_far, int min_pair_top,
                const std::function<void(const Permutation&)>& visit) {
  std::size_t pos = s.cur.size();
  int n = static_cast<int>(s.block_of_pos.size());
  if (static_cast<int>(pos) == n) {
    visit(Permutation(s.cur));
    return;
  }
  bool continues_block = pos > 0 && s.block_of_pos[pos] == s.block_of_pos[pos - 1];
  int lower = continues_block ? s.cur.back() + 1 : 1;
  for (int v = lower; v <= n; ++v) {
    if (s.used[v]) continue;
    if (s.avoid_123 && v > min_pair_top) break;
    int top = v > min_so_far ? std::min(min_pair_top, v) : min_pair_top;
    s.used[v] = 1;
    s.cur.push_back(v);
    gen_labels(s, std::min(min_so_far, v), top, visit);
    s.cur.pop_back();
    s.used[v] = 0;
  }
}

}  // namespace

void for_each_increasing_plane_tree(int vertices, const std::function<void(const PlaneTree&)>& visit) {
  if (vertices < 1) throw PreconditionError("a tree needs at least one vertex");
  PlaneTree t(vertices);
  gen_plane(t, 2, vertices, 0, visit);
}

void for_each_edge_labeling(const PlaneTree& shape, bool avoid_123,
                            const std::function<void(const Permutation&)>& visit) {
  LabelingState s;
  for (int v = 1; v <= shape.vertex_count(); ++v)
    for (std::size_t k = 0; k < shape.children[v].size(); ++k) s.block_of_pos.push_back(v);
  s.used.assign(s.block_of_pos.size() + 1, 0);
  s.avoid_123 = avoid_123;
  gen_labels(s, INT_MAX, INT_MAX, visit);
}

void for_each_parking_tree(int n, const std::function<void(const ParkingTree&)>& visit, int max_n) {
  if (n < 0) throw PreconditionError("negative size");
  if (n > max_n)
    throw CapacityError("parking tree enumeration is bounded by n <= " + std::to_string(max_n));
  for_each_increasing_plane_tree(n + 1, [&](const PlaneTree& shape) {
    for_each_edge_labeling(shape, false, [&](const Permutation& pi) { visit(with_edge_labels(shape, pi)); });
  });
}

}  // namespace toricg
