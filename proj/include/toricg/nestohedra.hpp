#pragma once

#include "toricg/common.hpp"
#include "toricg/config.hpp"
#include "toricg/perms.hpp"
#include "toricg/polyvec.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace toricg {

using Mask = std::uint32_t;

/// Closure or singleton failure; witnesses holds the offending sets.
class ValidationError : public StructuralError {
 public:
  ValidationError(const std::string& what, std::vector<IntSet> witnesses)
      : StructuralError(what), witnesses_(std::move(witnesses)) {}
  const std::vector<IntSet>& witnesses() const { return witnesses_; }

 private:
  std::vector<IntSet> witnesses_;
};

/// A family of nonempty subsets of [m], stored as sorted distinct bitmasks.
class BuildingSet {
 public:
  static constexpr int kMaxGround = 16;

  BuildingSet() = default;
  /// Members must lie in [m]; duplicates are dropped. No closure check here.
  BuildingSet(int ground_size, const std::vector<IntSet>& sets);
  static BuildingSet from_masks(int ground_size, std::vector<Mask> masks);

  int ground_size() const { return m_; }
  const std::vector<Mask>& masks() const { return masks_; }
  std::vector<IntSet> sets() const;
  bool contains(Mask s) const;
  Mask full() const { return m_ == 0 ? 0 : ((Mask{1} << m_) - 1); }

  /// {"ground_size": m, "sets": [[1],[2],...]}
  static BuildingSet from_json(const std::string& text);
  std::string to_json() const;

  friend bool operator==(const BuildingSet&, const BuildingSet&) = default;

 private:
  int m_ = 0;
  std::vector<Mask> masks_;
};

IntSet mask_to_set(Mask s);
Mask set_to_mask(const IntSet& s);

struct Validation {
  bool connected = false;
  bool chordal = false;
};

/// Throws ValidationError on a missing singleton or a union that is not closed.
Validation validate(const BuildingSet& bs);

/// Vertex sets of [m] inducing connected subgraphs.
BuildingSet graphical(int m, const std::vector<std::pair<int, int>>& edges);

std::vector<Mask> restrict_to(const BuildingSet& bs, Mask t);
/// Maximal members of the restriction, sorted.
std::vector<Mask> components(const BuildingSet& bs, Mask t);

bool is_b_permutation(const BuildingSet& bs, const Permutation& p);

/// Lexicographic order. Requires a connected building set on [n+1].
void for_each_b_permutation(const BuildingSet& bs, const std::function<void(const Permutation&)>& visit,
                            int max_n = kDefaultLimits.b_permutations);
std::vector<Permutation> b_permutations(const BuildingSet& bs, int max_n = kDefaultLimits.b_permutations);

/// Both require a connected chordal building set.
IntVec h_chordal(const BuildingSet& bs, int max_n = kDefaultLimits.b_permutations);
IntVec gamma_chordal(const BuildingSet& bs, int max_n = kDefaultLimits.b_permutations);
/// gamma_j counted as right-adjusted Foata-Strehl trees of B-permutations with j forks.
IntVec gamma_by_forks(const BuildingSet& bs, int max_n = kDefaultLimits.b_permutations);

IntPoly toric_g_chordal(const BuildingSet& bs, int max_n = kDefaultLimits.b_permutations);

/// Counts parking trees by the ascents of their 123-avoiding parking
/// function, over 0-1-2 shapes whose right-adjusted Foata-Strehl tree
/// reads as a B-permutation.
IntPoly toric_g_direct(const BuildingSet& bs, int max_n = kDefaultLimits.direct);

struct NamedFamily {
  enum class Kind { permutahedron, stanley_pitman, associahedron_intervals, interpolation };
  Kind kind;
  int r = 0;  // interpolation only

  std::string name() const;
  /// "permutahedron", "stanley_pitman", "associahedron_intervals", "interpolation:<r>"
  static NamedFamily parse(const std::string& text);
};

/// The building set on [n+1] of the given family.
BuildingSet named_family(const NamedFamily& family, int n);

}  // namespace toricg
