#pragma once

// Z2 chain maps between finite complexes, the homological almost-embedding
// predicate, and a bounded exhaustive search for almost-embeddings.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvxtop/budget.hpp"
#include "cvxtop/complex.hpp"

namespace cvxtop {

/// One image chain per source face; images[d][i] is the image of
/// source.faces(d)[i].
struct ChainMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<std::vector<Chain>> images;

  const Chain& image(Simplex face) const;
  bool operator==(const ChainMap&) const = default;
};

/// Checks boundary commutation on every face of dimension >= 1. Throws
/// InputError if the map is malformed (missing image, wrong dimension,
/// simplex not in the target).
bool verify_chain_map(const ChainMap& f);

struct HaeVerdict {
  enum class Status { ok, not_chain_map, even_vertex_support, overlapping_supports };

  Status status = Status::ok;
  std::string diagnostic;
  // The offending face (first) or non-adjacent pair.
  std::optional<std::pair<Simplex, Simplex>> faces;

  bool ok() const { return status == Status::ok; }
};

/// Chain map + odd vertex supports + vertex-disjoint supports for every
/// pair of non-adjacent source faces.
HaeVerdict verify_hae(const ChainMap& f);

struct SearchOutcome {
  enum class Tag { found, exhausted_none, budget_exceeded };

  Tag tag = Tag::exhausted_none;
  std::optional<ChainMap> map;
  std::uint64_t nodes_explored = 0;
};

const char* to_string(SearchOutcome::Tag tag);

/// Backtracking search for a homological almost-embedding of k into l.
/// Faces are assigned in dimension order; vertex images range over odd
/// vertex sets in increasing bitmask order, higher faces over the affine
/// space of chains with the forced boundary that avoid the supports of
/// already-assigned non-adjacent faces. The first certificate found is
/// returned. Requires dim k <= dim l.
SearchOutcome search_hae(const SimplicialComplex& k, const SimplicialComplex& l,
                         std::uint64_t budget = kDefaultBudget);

/// Chain map induced by a vertex map (degenerate images vanish).
ChainMap induced_map(const SimplicialComplex& source, const SimplicialComplex& target,
                     const std::vector<int>& vertex_map);

/// The restriction of f to a subcomplex of its source.
ChainMap restrict_map(const ChainMap& f, const SimplicialComplex& sub);

// ".cm" format, one line per source face:
//   face <v0> <v1> ... -> <s00> <s01> ... ; <s10> <s11> ... ; ...
ChainMap parse_chain_map(std::istream& in, const SimplicialComplex& source,
                         const SimplicialComplex& target);
ChainMap parse_chain_map(const std::string& text, const SimplicialComplex& source,
                         const SimplicialComplex& target);
ChainMap load_chain_map(const std::string& path, const SimplicialComplex& source,
                        const SimplicialComplex& target);
std::string format_chain_map(const ChainMap& f);

}  // namespace cvxtop
