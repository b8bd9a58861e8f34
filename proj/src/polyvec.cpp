#include "toricg/polyvec.hpp"

#include <algorithm>
#include <sstream>

namespace toricg {

IntPoly::IntPoly(IntVec coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(IntVec{c}); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  IntVec v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const BigInt& c) { return IntPoly(IntVec{c, 1}); }

IntPoly IntPoly::parse(const std::string& text) {
  IntVec v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
    if (part.empty()) throw ParseError("empty coefficient in polynomial '" + text + "'");
    try {
      v.emplace_back(part);
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + part + "' in polynomial");
    }
  }
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::shifted(const BigInt& s) const {
  IntPoly out;
  IntPoly base = linear(s);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    out *= base;
    out += constant(*it);
  }
  return out;
}

IntPoly IntPoly::pow(int e) const {
  IntPoly out = constant(1);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  IntVec r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::string IntPoly::str() const { return c_.empty() ? "0" : vec_str(c_); }

std::string vec_str(const IntVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out;
}

namespace {

IntVec substitute_shift(const IntVec& v, long long s) {
  IntVec out = IntPoly(v).shifted(s).coeffs();
  out.resize(v.size(), 0);
  return out;
}

}  // namespace

IntVec f_to_h(const IntVec& f) { return substitute_shift(f, -1); }
IntVec h_to_f(const IntVec& h) { return substitute_shift(h, 1); }

bool is_palindromic(const IntVec& h) { return std::equal(h.begin(), h.end(), h.rbegin()); }

IntVec h_to_gamma(const IntVec& h) {
  if (h.empty() || !is_palindromic(h)) throw PreconditionError("h-vector is not palindromic: " + vec_str(h));
  int n = static_cast<int>(h.size()) - 1;
  IntVec gamma;
  for (int j = 0; 2 * j <= n; ++j) {
    BigInt r = h[j];
    for (int i = 0; i < j; ++i) r -= gamma[i] * binomial(n - 2 * i, j - i);
    gamma.push_back(r);
  }
  return gamma;
}

IntVec gamma_to_h(const IntVec& gamma, int n) {
  IntVec h(n + 1, 0);
  for (int j = 0; j < static_cast<int>(gamma.size()); ++j) {
    if (gamma[j] == 0) continue;
    if (2 * j > n) throw PreconditionError("gamma vector too long for dimension");
    for (int i = 0; i <= n - 2 * j; ++i) h[i + j] += gamma[j] * binomial(n - 2 * j, i);
  }
  return h;
}

IntPoly cnix(int n, int i) {
  if (i < 0 || 2 * i > n) throw PreconditionError("C(n,i,x) needs 0 <= 2i <= n");
  if (i == 0) return IntPoly::constant(1);
  IntVec c(i + 1, 0);
  for (int k = 1; k <= i; ++k) {
    BigInt num = BigInt(n + 1 - 2 * i) * binomial(n - i, k - 1) * binomial(i - 1, k - 1);
    if (num % k != 0) throw std::logic_error("C(n,i,x) coefficient is not integral");
    c[k] = num / k;
  }
  return IntPoly(std::move(c));
}

IntPoly g_contrib(int n, int j) {
  if (n < 0 || j < 0) throw PreconditionError("g_{n,j} needs n, j >= 0");
  IntPoly out;
  if (j > n) return out;
  IntPoly xm1 = IntPoly::linear(-1);
  for (int k = 0; k <= std::min(n / 2, n - j); ++k)
    out += xm1.pow(k) * (catalan(n - k - j) * binomial(n - k, k));
  return out;
}

IntPoly toric_g_from_gamma(int n, const IntVec& gamma) {
  IntPoly out;
  for (int j = 0; j < static_cast<int>(gamma.size()); ++j)
    if (gamma[j] != 0) out += g_contrib(n, j) * gamma[j];
  return out;
}

IntPoly toric_g_from_h(const IntVec& h) {
  if (h.empty() || !is_palindromic(h)) throw PreconditionError("h-vector is not palindromic: " + vec_str(h));
  int n = static_cast<int>(h.size()) - 1;
  IntPoly out = IntPoly::constant(h[0]);
  for (int i = 1; 2 * i <= n; ++i) out += cnix(n, i) * (h[i] - h[i - 1]);
  return out;
}

IntPoly narayana(int k) {
  if (k < 0) throw PreconditionError("negative Narayana index");
  if (k == 0) return IntPoly::monomial(1, 1);
  IntVec c(k + 1, 0);
  for (int j = 1; j <= k; ++j) c[j] = binomial(k, j) * binomial(k, j - 1) / k;
  return IntPoly(std::move(c));
}

std::vector<std::vector<IntPoly>> peak_table(int n_max) {
  std::vector<IntPoly> nar;
  IntVec cat;
  for (int k = 0; k <= n_max; ++k) {
    nar.push_back(narayana(k));
    cat.push_back(catalan(k));
  }
  std::vector<std::vector<IntPoly>> p(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    p[n].resize(2 * n + 1);
    p[n][0] = IntPoly::constant(cat[n]);
    for (int m = 1; m <= 2 * n; ++m) {
      IntPoly acc;
      for (int k = 0; 2 * k <= m - 2; ++k) acc += nar[k] * p[n - k - 1][m - 2 * k - 2];
      for (int k = m / 2; k <= n - 1; ++k) acc += p[k][m - 1] * cat[n - k - 1];
      p[n][m] = acc;
    }
  }
  return p;
}

IntPoly peak_poly(int n, int m) {
  if (n < 0 || m < 0 || m > 2 * n) throw PreconditionError("peak polynomial needs 0 <= m <= 2n");
  return peak_table(n)[n][m];
}

std::string family_name(Family f) {
  switch (f) {
    case Family::cube: return "cube";
    case Family::associahedron: return "associahedron";
    case Family::cyclohedron: return "cyclohedron";
    case Family::permutahedron: return "permutahedron";
  }
  return "";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::cube, Family::associahedron, Family::cyclohedron, Family::permutahedron})
    if (family_name(f) == name) return f;
  throw ParseError("unknown family '" + name + "'");
}

IntVec eulerian(int m) {
  if (m < 1) throw PreconditionError("Eulerian numbers need m >= 1");
  IntVec a{1};
  for (int r = 2; r <= m; ++r) {
    IntVec b(r, 0);
    for (int k = 0; k < r; ++k) {
      if (k < r - 1) b[k] += (k + 1) * a[k];
      if (k > 0) b[k] += (r - k) * a[k - 1];
    }
    a = std::move(b);
  }
  return a;
}

IntVec gamma_family(Family f, int n) {
  if (n < 1) throw PreconditionError("dimension must be at least 1");
  IntVec g;
  switch (f) {
    case Family::cube: {
      IntVec h;
      for (int i = 0; i <= n; ++i) h.push_back(binomial(n, i));
      return h_to_gamma(h);
    }
    case Family::associahedron:
      for (int j = 0; 2 * j <= n; ++j) g.push_back(catalan(j) * binomial(n, 2 * j));
      return g;
    case Family::cyclohedron:
      for (int j = 0; 2 * j <= n; ++j) g.push_back(binomial(2 * j, j) * binomial(n, 2 * j));
      return g;
    case Family::permutahedron: {
      g = {1};
      for (int m = 2; m <= n; ++m) {
        IntVec next(m / 2 + 1, 0);
        for (int j = 0; j <= m / 2; ++j) {
          if (j < static_cast<int>(g.size())) next[j] += (j + 1) * g[j];
          if (j > 0) next[j] += (2 * m + 2 - 4 * j) * g[j - 1];
        }
        g = std::move(next);
      }
      return g;
    }
  }
  return g;
}

IntVec h_family(Family f, int n) {
  if (n < 1) throw PreconditionError("dimension must be at least 1");
  IntVec h;
  for (int i = 0; i <= n; ++i) {
    switch (f) {
      case Family::cube: h.push_back(binomial(n, i)); break;
      case Family::associahedron: h.push_back(binomial(n + 1, i) * binomial(n + 1, i + 1) / (n + 1)); break;
      case Family::cyclohedron: h.push_back(binomial(n, i) * binomial(n, i)); break;
      case Family::permutahedron: break;
    }
  }
  return f == Family::permutahedron ? eulerian(n + 1) : h;
}

TruncSeries::TruncSeries(std::vector<std::string> vars, int order) : vars_(std::move(vars)), order_(order) {}

void TruncSeries::add_term(const Exponent& e, const IntPoly& c) {
  if (e.size() != vars_.size()) throw PreconditionError("exponent arity does not match the series variables");
  int total = 0;
  for (int d : e) total += d;
  if (total > order_) return;
  IntPoly& slot = terms_[e];
  slot += c;
  if (slot.is_zero()) terms_.erase(e);
}

IntPoly TruncSeries::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? IntPoly() : it->second;
}

void TruncSeries::check_same_ring(const TruncSeries& o) const {
  if (vars_ != o.vars_ || order_ != o.order_) throw PreconditionError("series live in different rings");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_same_ring(b);
  TruncSeries out(a.vars_, a.order_);
  TruncSeries::Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

SeriesData build_series(int order) {
  if (order < 1) throw PreconditionError("series order must be at least 1");
  SeriesData d;
  d.order = order;
  d.g.assign(order + 1, std::vector<IntPoly>(order + 1));
  for (int n = 0; n <= order; ++n)
    for (int j = 0; j <= order; ++j) d.g[n][j] = g_contrib(n, j);
  d.p = peak_table(order);
  for (int k = 0; k <= order; ++k) {
    d.narayana.push_back(narayana(k));
    d.catalan.push_back(catalan(k));
  }
  return d;
}

namespace {

std::string exponent_str(const std::vector<std::string>& vars, const TruncSeries::Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i] + '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

/// First exponent (in map order) where the two series differ.
void compare(const TruncSeries& lhs, const TruncSeries& rhs, IdentityCheck& check, const std::string& label) {
  if (!check.ok) return;
  TruncSeries diff = lhs - rhs;
  if (diff.terms().empty()) return;
  const auto& [e, c] = *diff.terms().begin();
  check.ok = false;
  check.failure = label + ": coefficient of " + exponent_str(lhs.vars(), e) + " differs (lhs " +
                  lhs.coeff(e).str() + ", rhs " + rhs.coeff(e).str() + ")";
}

void compare(const IntPoly& lhs, const IntPoly& rhs, IdentityCheck& check, const std::string& label) {
  if (!check.ok || lhs == rhs) return;
  check.ok = false;
  check.failure = label + " differs (lhs " + lhs.str() + ", rhs " + rhs.str() + ")";
}

TruncSeries t_series(const std::vector<IntPoly>& coeffs, int order) {
  TruncSeries s({"t"}, order);
  for (int n = 0; n < static_cast<int>(coeffs.size()); ++n) s.add_term({n}, coeffs[n]);
  return s;
}

}  // namespace

std::vector<IdentityCheck> check_series(const SeriesData& d) {
  const int order = d.order;
  const IntPoly xm1 = IntPoly::linear(-1);
  std::vector<IdentityCheck> out;

  std::vector<TruncSeries> G;
  for (int j = 0; j <= order; ++j) {
    std::vector<IntPoly> col;
    for (int n = 0; n <= order; ++n) col.push_back(d.g[n][j]);
    G.push_back(t_series(col, order));
  }
  TruncSeries one({"t"}, order);
  one.add_term({0}, IntPoly::constant(1));
  TruncSeries step({"t"}, order);  // t (1 - t + x t)
  step.add_term({1}, IntPoly::constant(1));
  step.add_term({2}, xm1);

  IdentityCheck quad{"G0 quadratic functional equation", true, {}};
  compare(G[0], step * G[0] * G[0] + one, quad, "G0 = t(1-t+xt) G0^2 + 1");
  out.push_back(quad);

  IdentityCheck gj{"Gj from G0", true, {}};
  TruncSeries power = one;
  for (int j = 1; j <= order; ++j) {
    power = power * step;
    compare(G[j], power * G[0], gj, "G" + std::to_string(j) + " = t^j (1-t+xt)^j G0");
  }
  out.push_back(gj);

  IdentityCheck rec{"g_{n,j} recurrence", true, {}};
  for (int n = 2; n <= order; ++n)
    for (int j = 1; j <= order; ++j)
      compare(d.g[n][j], d.g[n - 1][j - 1] + xm1 * d.g[n - 2][j - 1], rec,
              "g_{" + std::to_string(n) + "," + std::to_string(j) + "}");
  out.push_back(rec);

  IdentityCheck rec0{"g_{n,0} convolution recurrence", true, {}};
  for (int n = 1; n <= order; ++n) {
    IntPoly first;
    IntPoly second;
    for (int m = 2; m <= n; ++m) first += d.g[m - 2][0] * d.g[n - m][0];
    for (int m = 1; m <= n; ++m) second += d.g[m - 1][0] * d.g[n - m][0];
    compare(d.g[n][0], xm1 * first + second, rec0, "g_{" + std::to_string(n) + ",0}");
  }
  out.push_back(rec0);

  IdentityCheck peak{"peak generating function", true, {}};
  std::vector<std::string> yz{"y", "z"};
  TruncSeries P(yz, order);
  for (int n = 0; n < static_cast<int>(d.p.size()); ++n)
    for (int m = 0; m < static_cast<int>(d.p[n].size()); ++m) P.add_term({n, m}, d.p[n][m]);
  TruncSeries Cy(yz, order);
  TruncSeries denom(yz, order);
  denom.add_term({0, 0}, IntPoly::constant(1));
  for (int k = 0; k <= order; ++k) {
    Cy.add_term({k, 0}, IntPoly::constant(d.catalan[k]));
    denom.add_term({k + 1, 2 * k + 2}, -d.narayana[k]);   // y z^2 N(x, y z^2)
    denom.add_term({k + 1, 1}, IntPoly::constant(-d.catalan[k]));  // y z C(y)
  }
  compare(P * denom, Cy, peak, "P (1 - y z^2 N(x,y z^2) - y z C(y)) = C(y)");
  out.push_back(peak);

  return out;
}

std::vector<IdentityCheck> verify_series(int order) { return check_series(build_series(order)); }

namespace {

using RatPoly = std::vector<BigRational>;

void rtrim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size()) {
    BigRational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    rtrim(a);
  }
  return a;
}

RatPoly quot(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) return {};
  RatPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    BigRational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    rtrim(a);
  }
  return q;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
  rtrim(d);
  return d;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign(const BigRational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sturm_real_root_count(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("the zero polynomial has no root count");
  RatPoly a;
  for (const auto& c : p.coeffs()) a.emplace_back(c);
  RatPoly sq = quot(a, gcd(a, derivative(a)));
  std::vector<RatPoly> seq{sq, derivative(sq)};
  rtrim(seq.back());
  while (!seq.back().empty()) {
    RatPoly r = rem(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  std::vector<int> at_neg;
  std::vector<int> at_pos;
  for (const auto& s : seq) {
    int lead = sign(s.back());
    at_pos.push_back(lead);
    at_neg.push_back((s.size() - 1) % 2 == 0 ? lead : -lead);
  }
  return variations(at_neg) - variations(at_pos);
}

bool sturm_real_rooted(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("the zero polynomial has no root count");
  RatPoly a;
  for (const auto& c : p.coeffs()) a.emplace_back(c);
  RatPoly sq = quot(a, gcd(a, derivative(a)));
  return sturm_real_root_count(p) == static_cast<int>(sq.size()) - 1;
}

BigInt kruskal_katona_bound(const BigInt& value, int k) {
  if (k < 1) throw PreconditionError("cascade index must be at least 1");
  BigInt rest = value;
  BigInt bound = 0;
  for (int i = k; i >= 1 && rest > 0; --i) {
    // largest a with binom(a, i) <= rest
    long long a = i;
    BigInt cur = 1;  // binom(a, i)
    while (true) {
      BigInt next = cur * (a + 1) / (a + 1 - i);
      if (next > rest) break;
      cur = next;
      ++a;
    }
    bound += binomial(a, i + 1);
    rest -= cur;
  }
  return bound;
}

bool kruskal_katona_ok(const IntVec& v) {
  IntVec w = v;
  while (!w.empty() && w.back() == 0) w.pop_back();
  if (w.empty() || w[0] != 1) throw PreconditionError("vector must start with 1");
  for (const auto& x : w)
    if (x < 0) throw PreconditionError("entries must be nonnegative");
  for (std::size_t k = 1; k + 1 < w.size(); ++k)
    if (w[k + 1] > kruskal_katona_bound(w[k], static_cast<int>(k))) return false;
  return true;
}

}  // namespace toricg
