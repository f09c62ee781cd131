#pragma once

#include <algorithm>
#include <random>
#include <string>

#include "cvxtop/complex.hpp"
#include "cvxtop/corpus.hpp"
#include "cvxtop/set_system.hpp"

namespace fixtures {

inline std::string data(const std::string& rel) { return std::string(CVXTOP_DATA_DIR) + "/" + rel; }

inline cvxtop::SetSystem star() { return cvxtop::parse_set_system("ground 3\nset 0 1\nset 0 2\nset 1 2\n"); }
inline cvxtop::SetSystem single(int ground = 1) {
  return cvxtop::SetSystem(ground, {cvxtop::ElementSet::full(ground)});
}
inline cvxtop::SetSystem intervals(int n) { return cvxtop::intervals_system(n); }

inline cvxtop::SimplicialComplex complex_file(const std::string& name) {
  return cvxtop::load_complex(data("complexes/" + name));
}

/// Random complex: downward closure of a few random nonempty vertex sets.
inline cvxtop::SimplicialComplex random_complex(std::mt19937_64& rng, int vertices, int generators,
                                                int max_size) {
  std::vector<cvxtop::Simplex> gens;
  for (int i = 0; i < generators; ++i) {
    cvxtop::Simplex s;
    const int size = std::min(vertices, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size)));
    while (s.size() < size) s.insert(static_cast<int>(rng() % static_cast<std::uint64_t>(vertices)));
    gens.push_back(s);
  }
  return cvxtop::SimplicialComplex::closure(vertices, gens);
}

}  // namespace fixtures
