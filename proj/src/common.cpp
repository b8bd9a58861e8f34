#include "toricg/common.hpp"

#include <algorithm>
#include <sstream>

namespace toricg {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt catalan(int n) {
  if (n < 0) return 0;
  return binomial(2LL * n, n) / (n + 1);
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

bool is_sparse(const IntSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] <= s[i - 1] + 1) return false;
  return true;
}

namespace {

void sparse_rec(int next, int hi, IntSet& cur, std::vector<IntSet>& out) {
  out.push_back(cur);
  for (int x = next; x <= hi; ++x) {
    cur.push_back(x);
    sparse_rec(x + 2, hi, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IntSet> sparse_subsets(int lo, int hi) {
  std::vector<IntSet> out;
  IntSet cur;
  sparse_rec(lo, hi, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(text);
  while (is >> tok) {
    for (auto& c : tok)
      if (c == ',') c = ' ';
    std::istringstream inner(tok);
    std::string piece;
    while (inner >> piece) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(piece, &used);
      } catch (const std::exception&) {
        throw ParseError("not an integer: '" + piece + "'");
      }
      if (used != piece.size()) throw ParseError("not an integer: '" + piece + "'");
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace toricg
