#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Sorted set of positive integers, e.g. an ascent set or a sparse set.
using IntSet = std::vector<int>;

// Error hierarchy. Every failure the library reports is one of these.

/// Input does not have the shape an operation requires (not a Dyck word, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration was asked to go beyond its configured bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text or JSON input could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt binomial(long long n, long long k);
BigInt catalan(int n);
BigInt factorial(int n);

/// True iff the sorted set contains no two consecutive integers.
bool is_sparse(const IntSet& s);

/// All sparse subsets of [lo, hi], in lexicographic order of their sorted lists.
std::vector<IntSet> sparse_subsets(int lo, int hi);

std::string join_ints(const std::vector<int>& v, const std::string& sep);
std::vector<int> parse_ints(const std::string& text);

}  // namespace toricg
