#pragma once

// Reduced Z2 homology of finite complexes, intersection patterns of
// subcomplex families, and mu(K).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvxtop/budget.hpp"
#include "cvxtop/complex.hpp"
#include "cvxtop/profile.hpp"
#include "cvxtop/set_system.hpp"

namespace cvxtop {

/// Reduced Betti numbers b~_0 .. b~_dim over Z2. Indices past the end read
/// as 0; the empty complex has no entries.
struct BettiVector {
  std::vector<int> values;

  int operator[](int i) const {
    return i >= 0 && i < static_cast<int>(values.size()) ? values[static_cast<std::size_t>(i)] : 0;
  }
  bool operator==(const BettiVector&) const = default;
};

BettiVector reduced_betti(const SimplicialComplex& k);

/// Ordered list of subcomplexes of a common base complex.
struct SubcomplexFamily {
  SimplicialComplex base;
  std::vector<std::string> names;
  std::vector<SimplicialComplex> members;

  int size() const { return static_cast<int>(members.size()); }
  /// Throws InputError unless every member lies in the base and names match.
  void validate() const;
};

/// Face-set intersection of the selected members; the base for the empty
/// selector.
SimplicialComplex intersection_subcomplex(const SubcomplexFamily& fam, Selector g);

/// Homological shatter profile: the value at k is the maximum of b~_i,
/// 0 <= i <= h, over intersections of 1..k members.
Budgeted<GradedProfile> shatter(const SubcomplexFamily& fam, int h, int k_max,
                                const SearchOptions& opts = {});

/// h-level topological complexity: maximum of b~_i, 0 <= i < h, over the
/// intersections of all nonempty subfamilies.
Budgeted<int> level_complexity(const SubcomplexFamily& fam, int h, const SearchOptions& opts = {});

/// The k-skeleton of the N-simplex on vertices 0..N.
SimplicialComplex skeleton_simplex(int n, int k);

/// Maximum of dim s + dim t over vertex-disjoint faces s, t; std::nullopt
/// when no such pair exists.
std::optional<int> mu(const SimplicialComplex& k);

// ".scf" format: a ".sc" base section, then for each member
//   member <name>
//   msimplex <v0> <v1> ...
SubcomplexFamily parse_family(std::istream& in);
SubcomplexFamily parse_family(const std::string& text);
SubcomplexFamily load_family(const std::string& path);
std::string format_family(const SubcomplexFamily& fam);

}  // namespace cvxtop
