#pragma once

namespace toricg {

/// Capacity bounds for the exhaustive enumerations, all in terms of the
/// dimension n. The CLI can lift them with --unsafe-max.
struct CapacityLimits {
  int table = 12;            // gamma and hvector routes
  int direct = 6;            // brute-force toric g routes
  int parking_trees = 7;     // (7!)^2 = 25.4M trees
  int b_permutations = 7;    // S_{n+1} filtered
  int functions = 7;         // n^n functions
  int words = 16;            // Dyck/balanced semilength
};

inline constexpr CapacityLimits kDefaultLimits{};

}  // namespace toricg
