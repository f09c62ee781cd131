#include "cvxtop/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "cvxtop/errors.hpp"
#include "cvxtop/gf2.hpp"
#include "parallel.hpp"
#include "text_io.hpp"

namespace cvxtop {
namespace {

// Rank of the boundary map from d-faces to (d-1)-faces; for d = 0 the
// augmentation.
std::size_t boundary_rank(const SimplicialComplex& k, int d) {
  const auto& cols = k.faces(d);
  if (cols.empty()) return 0;
  if (d == 0) return 1;
  const std::size_t rows = k.faces(d - 1).size();
  std::vector<BitVector> vectors;
  vectors.reserve(cols.size());
  for (Simplex s : cols) {
    BitVector v(rows);
    for (std::uint64_t b = s.bits(); b; b &= b - 1) v.set(*k.index_of(s ^ Simplex(b & -b)));
    vectors.push_back(std::move(v));
  }
  return gf2_rank(std::move(vectors));
}

// For each selector size 1..cap, the largest max_{i in [0, top)} b~_i.
Budgeted<std::vector<int>> per_size_maxima(const SubcomplexFamily& fam, int cap, int top,
                                           const SearchOptions& opts) {
  const int n = fam.size();
  if (n > 30) return BudgetExceeded{opts.budget + 1, std::nullopt};
  const std::uint64_t count = std::uint64_t{1} << n;
  if (count > opts.budget) return BudgetExceeded{count, std::nullopt};
  // Distinct intersections, in order of first appearance.
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  std::vector<SimplicialComplex> unique;
  std::vector<std::pair<int, std::size_t>> item_of;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const int size = std::popcount(mask);
    if (size > cap) continue;
    auto cap_complex = intersection_subcomplex(fam, Selector(mask));
    std::vector<std::uint64_t> key;
    for (int d = 0; d <= cap_complex.dimension(); ++d)
      for (Simplex s : cap_complex.faces(d)) key.push_back(s.bits());
    auto [it, fresh] = index.emplace(std::move(key), unique.size());
    if (fresh) unique.push_back(std::move(cap_complex));
    item_of.emplace_back(size, it->second);
  }
  auto run = detail::run_ordered<int>(unique.size(), opts, count,
                                      [&](std::size_t i, Budget& b) -> std::optional<int> {
    if (!b.spend(unique[i].face_count() + 1)) return std::nullopt;
    const auto betti = reduced_betti(unique[i]);
    int best = 0;
    for (int j = 0; j < top; ++j) best = std::max(best, betti[j]);
    return best;
  });
  if (!run.complete) return BudgetExceeded{run.nodes, std::nullopt};
  std::vector<int> by_size(static_cast<std::size_t>(cap) + 1, 0);
  for (auto [size, u] : item_of)
    by_size[static_cast<std::size_t>(size)] = std::max(by_size[static_cast<std::size_t>(size)], run.values[u]);
  return by_size;
}

}  // namespace

BettiVector reduced_betti(const SimplicialComplex& k) {
  BettiVector out;
  const int dim = k.dimension();
  std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
  for (int d = 0; d <= dim; ++d) rank[static_cast<std::size_t>(d)] = boundary_rank(k, d);
  for (int d = 0; d <= dim; ++d) {
    const auto f = k.faces(d).size();
    out.values.push_back(static_cast<int>(f - rank[static_cast<std::size_t>(d)] -
                                          rank[static_cast<std::size_t>(d) + 1]));
  }
  return out;
}

void SubcomplexFamily::validate() const {
  if (names.size() != members.size()) throw InputError("family: names and members differ in count");
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!members[i].subcomplex_of(base))
      throw InputError("family member '" + names[i] + "' is not a subcomplex of the base");
}

SimplicialComplex intersection_subcomplex(const SubcomplexFamily& fam, Selector g) {
  if (!g.subset_of(Selector::full(fam.size())))
    throw InputError("selector refers to a member position >= " + std::to_string(fam.size()));
  SimplicialComplex acc = fam.base;
  for (int i : g.indices()) acc = acc.intersect(fam.members[static_cast<std::size_t>(i)]);
  return acc;
}

Budgeted<GradedProfile> shatter(const SubcomplexFamily& fam, int h, int k_max,
                                const SearchOptions& opts) {
  if (h < 0 || h > fam.base.dimension())
    throw InputError("shatter: h must be in [0, dim base]");
  if (k_max < 1) throw InputError("shatter: k_max must be at least 1");
  const int cap = std::min(k_max, fam.size());
  auto sizes = per_size_maxima(fam, cap, h + 1, opts);
  if (!sizes) return sizes.exceeded();
  GradedProfile out;
  int running = 0;
  for (int k = 1; k <= k_max; ++k) {
    if (k <= cap) running = std::max(running, (*sizes)[static_cast<std::size_t>(k)]);
    out.values.push_back(running);
  }
  return out;
}

Budgeted<int> level_complexity(const SubcomplexFamily& fam, int h, const SearchOptions& opts) {
  if (h < 1) throw InputError("level complexity: h must be at least 1");
  auto sizes = per_size_maxima(fam, fam.size(), h, opts);
  if (!sizes) return sizes.exceeded();
  return *std::max_element(sizes->begin(), sizes->end());
}

SimplicialComplex skeleton_simplex(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw InputError("skeleton: need 0 <= k <= N");
  if (n + 1 > SimplicialComplex::kMaxVertices) throw InputError("skeleton: N too large");
  std::vector<Simplex> gens;
  const std::uint64_t all = Simplex::full(n + 1).bits();
  // All (k+1)-subsets of {0..n}.
  for (std::uint64_t s = (std::uint64_t{1} << (k + 1)) - 1; s <= all && s != 0;) {
    gens.emplace_back(s);
    const std::uint64_t c = s & -s;
    const std::uint64_t r = s + c;
    if (r == 0 || r > all) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return SimplicialComplex::closure(n + 1, gens);
}

std::optional<int> mu(const SimplicialComplex& k) {
  auto disjoint_pair = [&](int d1, int d2) {
    for (Simplex s : k.faces(d1))
      for (Simplex t : k.faces(d2))
        if (!s.intersects(t)) return true;
    return false;
  };
  std::optional<int> best;
  for (int d1 = k.dimension(); d1 >= 0; --d1)
    for (int d2 = d1; d2 >= 0; --d2) {
      if (best && d1 + d2 <= *best) break;
      if (disjoint_pair(d1, d2)) best = d1 + d2;
    }
  return best;
}

SubcomplexFamily parse_family(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.empty()) throw InputError("empty family file");
  const auto& head = lines.front();
  if (head.tokens[0] != "vertices" || head.tokens.size() != 2)
    detail::fail(head.number, "expected 'vertices <n>'");
  const auto n = detail::parse_int(head.tokens[1], head.number);
  if (n < 0 || n > SimplicialComplex::kMaxVertices) detail::fail(head.number, "vertex count must be in [0, 64]");
  auto read_simplex = [&](const detail::Line& line) {
    if (line.tokens.size() < 2) detail::fail(line.number, "empty simplex");
    Simplex s;
    for (std::size_t j = 1; j < line.tokens.size(); ++j) {
      const auto v = detail::parse_int(line.tokens[j], line.number);
      if (v < 0 || v >= n) detail::fail(line.number, "vertex " + line.tokens[j] + " out of range");
      s.insert(static_cast<int>(v));
    }
    return s;
  };
  std::vector<Simplex> base;
  std::vector<std::string> names;
  std::vector<std::vector<Simplex>> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& word = line.tokens[0];
    if (word == "simplex") {
      if (!names.empty()) detail::fail(line.number, "'simplex' after the first 'member'");
      base.push_back(read_simplex(line));
    } else if (word == "member") {
      if (line.tokens.size() != 2) detail::fail(line.number, "expected 'member <name>'");
      names.push_back(line.tokens[1]);
      gens.emplace_back();
    } else if (word == "msimplex") {
      if (names.empty()) detail::fail(line.number, "'msimplex' before any 'member'");
      gens.back().push_back(read_simplex(line));
    } else {
      detail::fail(line.number, "unknown directive '" + word + "'");
    }
  }
  SubcomplexFamily fam;
  fam.base = SimplicialComplex::closure(static_cast<int>(n), base);
  fam.names = std::move(names);
  for (const auto& g : gens) fam.members.push_back(SimplicialComplex::closure(static_cast<int>(n), g));
  fam.validate();
  return fam;
}

SubcomplexFamily parse_family(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

SubcomplexFamily load_family(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_family(in);
}

std::string format_family(const SubcomplexFamily& fam) {
  std::ostringstream out;
  out << format_complex(fam.base);
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    out << "member " << fam.names[i] << '\n';
    for (Simplex s : fam.members[i].facets()) {
      out << "msimplex";
      for (int v : s.indices()) out << ' ' << v;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace cvxtop
