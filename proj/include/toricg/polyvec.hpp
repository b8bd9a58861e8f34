#pragma once

#include "toricg/common.hpp"

#include <map>
#include <string>
#include <vector>

namespace toricg {

using IntVec = std::vector<BigInt>;

/// Dense univariate polynomial over the integers, index = degree.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(IntVec coeffs);
  IntPoly(std::initializer_list<long long> coeffs);
  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, int degree);
  /// x + c
  static IntPoly linear(const BigInt& c);

  /// "1,37,10" (low degree first); "0" for the zero polynomial.
  static IntPoly parse(const std::string& text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigInt coeff(int k) const;
  const IntVec& coeffs() const { return c_; }
  BigInt eval(const BigInt& x) const;
  /// p(x + s)
  IntPoly shifted(const BigInt& s) const;
  IntPoly pow(int e) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& s);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
  IntPoly operator-() const;

  std::string str() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  IntVec c_;
};

std::string vec_str(const IntVec& v);

/// sum h_i x^i = sum f_i (x-1)^i
IntVec f_to_h(const IntVec& f);
IntVec h_to_f(const IntVec& h);

bool is_palindromic(const IntVec& h);
/// sum h_i x^i = sum gamma_j x^j (1+x)^{n-2j}, n = len(h) - 1.
/// Throws PreconditionError on a non-palindromic vector.
IntVec h_to_gamma(const IntVec& h);
IntVec gamma_to_h(const IntVec& gamma, int n);

/// C(n,i,x); requires 0 <= 2i <= n.
IntPoly cnix(int n, int i);
/// g_{n,j}(x); zero when j > n.
IntPoly g_contrib(int n, int j);
IntPoly toric_g_from_gamma(int n, const IntVec& gamma);
/// h_0 + sum_{i=1}^{n/2} (h_i - h_{i-1}) C(n,i,x), n = len(h) - 1.
IntPoly toric_g_from_h(const IntVec& h);

/// N_k(x), with N_0(x) = x.
IntPoly narayana(int k);

/// p[n][m] for 0 <= n <= n_max, 0 <= m <= 2n, by the first-return recurrence.
std::vector<std::vector<IntPoly>> peak_table(int n_max);
/// Requires 0 <= m <= 2n.
IntPoly peak_poly(int n, int m);

enum class Family { cube, associahedron, cyclohedron, permutahedron };

std::string family_name(Family f);
/// Throws ParseError on an unknown name.
Family parse_family(const std::string& name);

/// Eulerian numbers A(m, 0..m-1): descent counts over S_m.
IntVec eulerian(int m);
IntVec gamma_family(Family f, int n);
/// Closed-form h-vectors: binomials, Narayana numbers, squared binomials,
/// Eulerian numbers of S_{n+1}.
IntVec h_family(Family f, int n);

/// Total-degree-truncated power series in a few named variables with
/// coefficients in Z[x].
class TruncSeries {
 public:
  using Exponent = std::vector<int>;

  TruncSeries(std::vector<std::string> vars, int order);

  const std::vector<std::string>& vars() const { return vars_; }
  int order() const { return order_; }

  /// Terms beyond the truncation order are silently dropped.
  void add_term(const Exponent& e, const IntPoly& c);
  IntPoly coeff(const Exponent& e) const;
  const std::map<Exponent, IntPoly>& terms() const { return terms_; }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

 private:
  void check_same_ring(const TruncSeries& o) const;
  std::vector<std::string> vars_;
  int order_;
  std::map<Exponent, IntPoly> terms_;  // no zero coefficients stored
};

/// The raw coefficient tables the series identities are assembled from.
struct SeriesData {
  int order = 0;
  std::vector<std::vector<IntPoly>> g;  // g[n][j], 0 <= j <= order
  std::vector<std::vector<IntPoly>> p;  // p[n][m], 0 <= m <= 2n
  std::vector<IntPoly> narayana;        // N_0..N_order
  IntVec catalan;                       // C_0..C_order
};

SeriesData build_series(int order);

struct IdentityCheck {
  std::string name;
  bool ok = true;
  /// Empty when ok; otherwise names the first offending coefficient.
  std::string failure;
};

/// Checks the five identity families on the given tables.
std::vector<IdentityCheck> check_series(const SeriesData& data);
std::vector<IdentityCheck> verify_series(int order);

/// Exact Sturm count over Q on the squarefree part. Throws on the zero polynomial.
bool sturm_real_rooted(const IntPoly& p);
/// Number of distinct real roots.
int sturm_real_root_count(const IntPoly& p);

/// v_{k+1} <= the Kruskal-Katona bound of v_k for every k >= 1.
bool kruskal_katona_ok(const IntVec& v);
/// Largest v_{k+1} allowed after v_k, from the k-cascade of v_k.
BigInt kruskal_katona_bound(const BigInt& value, int k);

}  // namespace toricg
