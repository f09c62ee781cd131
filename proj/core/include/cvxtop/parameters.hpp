#pragma once

// Exact, exhaustive computation of convexity parameters of finite set
// systems: Helly and Radon numbers, their graded versions, k-th partition
// numbers, colorful Helly numbers and fractional clique profiles.
//
// Every search charges a node Budget and returns Budgeted<T>: either the
// exact value or BudgetExceeded with the best proven lower bound.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cvxtop/budget.hpp"
#include "cvxtop/profile.hpp"
#include "cvxtop/set_system.hpp"

namespace cvxtop {

using Rational = boost::multiprecision::cpp_rational;

struct FractionalProfile {
  int s = 0;
  int c = 0;
  Rational alpha;  // fraction of s-subsets of positions that are c-wise cliques
  int max_cwise_clique = 0;
  int n = 0;
};

/// Inclusion-minimal subfamily with empty intersection.
struct Obstruction {
  Selector members;
  bool operator==(const Obstruction&) const = default;
};

enum class GradedParameter { helly, radon, colorful };

/// Smallest h such that every h-wise intersecting subfamily intersects.
/// 0 for the empty family, at least 1 otherwise.
Budgeted<int> helly(const SetSystem& f, const SearchOptions& opts = {});

/// All inclusion-minimal non-clique selectors, ordered by size then by
/// position mask.
Budgeted<std::vector<Obstruction>> minimal_obstructions(const SetSystem& f,
                                                        const SearchOptions& opts = {});

/// Smallest r such that every r-subset of the ground set has a partition
/// into two parts with intersecting hulls. Always in [2, ground_size + 1].
Budgeted<int> radon(const SetSystem& f, const SearchOptions& opts = {});

/// Largest ground subset without a Radon partition (lexicographically least
/// by bitmask among the largest), i.e. a witness for radon(f) - 1.
Budgeted<ElementSet> radon_witness(const SetSystem& f, const SearchOptions& opts = {});

/// k-th partition number over multisets of the ground set (k >= 2).
Budgeted<int> partition_number(const SetSystem& f, int k, const SearchOptions& opts = {});

/// Colorful Helly number. With `arity` set to c, the c-th colorful Helly
/// number (c-wise cliques, m >= c colors); with std::nullopt, the plain
/// colorful Helly number. Colorings are surjective.
Budgeted<int> colorful_helly(const SetSystem& f, std::optional<int> arity,
                             const SearchOptions& opts = {});

/// Graded parameter: the value at t is the maximum of the parameter over
/// subfamilies of at most t members. `arity` is only read for colorful.
Budgeted<GradedProfile> graded(const SetSystem& f, GradedParameter which, int t_max,
                               std::optional<int> arity = std::nullopt,
                               const SearchOptions& opts = {});

/// Exact density of c-wise cliques among s-subsets of members, and the
/// largest c-wise clique.
Budgeted<FractionalProfile> fh_profile(const SetSystem& f, int s, int c,
                                       const SearchOptions& opts = {});

}  // namespace cvxtop
