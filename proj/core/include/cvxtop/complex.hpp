#pragma once

// Finite abstract simplicial complexes on at most 64 numbered vertices, and
// GF(2) chains on them.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvxtop/set_system.hpp"

namespace cvxtop {

struct VertexTag {};
/// A simplex, given by its vertex set.
using Simplex = BitSet64<VertexTag>;

inline int simplex_dim(Simplex s) { return s.size() - 1; }

/// Downward-closed set of nonempty simplices. Faces are stored per
/// dimension, each list sorted by vertex bitmask.
class SimplicialComplex {
 public:
  static constexpr int kMaxVertices = 64;

  SimplicialComplex() = default;
  /// The empty complex with `vertex_count` vertex slots.
  explicit SimplicialComplex(int vertex_count);

  /// Downward closure of `generators`. Throws InputError on an empty
  /// generator or a vertex index outside [0, vertex_count).
  static SimplicialComplex closure(int vertex_count, const std::vector<Simplex>& generators);

  int vertex_count() const { return vertex_count_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }

  /// Faces of dimension d (empty list when d is out of range).
  const std::vector<Simplex>& faces(int d) const;
  bool contains(Simplex s) const;
  std::optional<std::size_t> index_of(Simplex s) const;
  std::size_t face_count() const;
  std::vector<std::size_t> f_vector() const;
  /// Vertices that are 0-faces.
  Simplex vertices() const;
  /// Inclusion-maximal faces, by dimension then bitmask.
  std::vector<Simplex> facets() const;

  bool subcomplex_of(const SimplicialComplex& other) const;
  SimplicialComplex intersect(const SimplicialComplex& other) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  void insert_sorted(std::vector<Simplex> all);

  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
};

/// GF(2) chain: a set of simplices of one dimension.
struct Chain {
  int dim = 0;
  std::vector<Simplex> simplices;  // sorted, distinct

  bool zero() const { return simplices.empty(); }
  bool operator==(const Chain&) const = default;
};

/// Builds a chain from a list (pairs cancel).
Chain make_chain(int dim, std::vector<Simplex> simplices);
Chain operator+(const Chain& a, const Chain& b);
/// Boundary; the boundary of a 0-chain is the zero chain of dimension -1.
Chain boundary(const Chain& c);
/// Vertex set of the support (downward closure of the simplices).
Simplex support_vertices(const Chain& c);

// ".sc" format:
//   vertices <n>
//   simplex <v0> <v1> ...
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex load_complex(const std::string& path);
/// Writes the facets.
std::string format_complex(const SimplicialComplex& k);

}  // namespace cvxtop
