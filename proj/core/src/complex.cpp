#include "cvxtop/complex.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "cvxtop/errors.hpp"
#include "text_io.hpp"

namespace cvxtop {
namespace {

const std::vector<Simplex> kNoFaces;

bool by_bits(Simplex a, Simplex b) { return a.bits() < b.bits(); }

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw InputError("vertex count must be in [0, 64]");
}

SimplicialComplex SimplicialComplex::closure(int vertex_count,
                                             const std::vector<Simplex>& generators) {
  SimplicialComplex k(vertex_count);
  const Simplex allowed = Simplex::full(vertex_count);
  std::vector<Simplex> all;
  for (Simplex g : generators) {
    if (g.empty()) throw InputError("empty simplex");
    if (!g.subset_of(allowed)) throw InputError("simplex vertex outside [0, vertex_count)");
    if (g.size() > 20) throw InputError("simplices of dimension above 19 are not supported");
    // All nonempty subsets of g.
    for (std::uint64_t sub = g.bits(); sub; sub = (sub - 1) & g.bits()) all.emplace_back(sub);
  }
  k.insert_sorted(std::move(all));
  return k;
}

void SimplicialComplex::insert_sorted(std::vector<Simplex> all) {
  std::sort(all.begin(), all.end(), by_bits);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  by_dim_.clear();
  for (Simplex s : all) {
    const auto d = static_cast<std::size_t>(s.size() - 1);
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(s);
  }
}

const std::vector<Simplex>& SimplicialComplex::faces(int d) const {
  if (d < 0 || d > dimension()) return kNoFaces;
  return by_dim_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> SimplicialComplex::index_of(Simplex s) const {
  const auto& list = faces(simplex_dim(s));
  auto it = std::lower_bound(list.begin(), list.end(), s, by_bits);
  if (it == list.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

bool SimplicialComplex::contains(Simplex s) const { return index_of(s).has_value(); }

std::size_t SimplicialComplex::face_count() const {
  std::size_t n = 0;
  for (const auto& l : by_dim_) n += l.size();
  return n;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& l : by_dim_) f.push_back(l.size());
  return f;
}

Simplex SimplicialComplex::vertices() const {
  Simplex v;
  for (Simplex s : faces(0)) v |= s;
  return v;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d)
    for (Simplex s : faces(d)) {
      bool maximal = true;
      for (Simplex t : faces(d + 1))
        if (s.subset_of(t)) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(s);
    }
  return out;
}

bool SimplicialComplex::subcomplex_of(const SimplicialComplex& other) const {
  for (int d = 0; d <= dimension(); ++d)
    for (Simplex s : faces(d))
      if (!other.contains(s)) return false;
  return true;
}

SimplicialComplex SimplicialComplex::intersect(const SimplicialComplex& other) const {
  SimplicialComplex k(std::max(vertex_count_, other.vertex_count_));
  std::vector<Simplex> common;
  for (int d = 0; d <= std::min(dimension(), other.dimension()); ++d) {
    const auto& a = faces(d);
    const auto& b = other.faces(d);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common),
                          by_bits);
  }
  k.insert_sorted(std::move(common));
  return k;
}

Chain make_chain(int dim, std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end(), by_bits);
  Chain c{dim, {}};
  for (std::size_t i = 0; i < simplices.size();) {
    std::size_t j = i;
    while (j < simplices.size() && simplices[j] == simplices[i]) ++j;
    if ((j - i) % 2 == 1) c.simplices.push_back(simplices[i]);
    i = j;
  }
  return c;
}

Chain operator+(const Chain& a, const Chain& b) {
  Chain c{a.dim, {}};
  std::set_symmetric_difference(a.simplices.begin(), a.simplices.end(), b.simplices.begin(),
                                b.simplices.end(), std::back_inserter(c.simplices), by_bits);
  return c;
}

Chain boundary(const Chain& c) {
  std::vector<Simplex> faces;
  if (c.dim >= 1)
    for (Simplex s : c.simplices)
      for (std::uint64_t b = s.bits(); b; b &= b - 1) faces.push_back(s ^ Simplex(b & -b));
  return make_chain(c.dim - 1, std::move(faces));
}

Simplex support_vertices(const Chain& c) {
  Simplex v;
  for (Simplex s : c.simplices) v |= s;
  return v;
}

SimplicialComplex parse_complex(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.empty()) throw InputError("empty complex file");
  const auto& head = lines.front();
  if (head.tokens[0] != "vertices" || head.tokens.size() != 2)
    detail::fail(head.number, "expected 'vertices <n>'");
  const auto n = detail::parse_int(head.tokens[1], head.number);
  if (n < 0 || n > SimplicialComplex::kMaxVertices) detail::fail(head.number, "vertex count must be in [0, 64]");
  std::vector<Simplex> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "simplex") detail::fail(line.number, "unknown directive '" + line.tokens[0] + "'");
    if (line.tokens.size() < 2) detail::fail(line.number, "empty simplex");
    Simplex s;
    for (std::size_t j = 1; j < line.tokens.size(); ++j) {
      const auto v = detail::parse_int(line.tokens[j], line.number);
      if (v < 0 || v >= n) detail::fail(line.number, "vertex " + line.tokens[j] + " out of range");
      s.insert(static_cast<int>(v));
    }
    gens.push_back(s);
  }
  return SimplicialComplex::closure(static_cast<int>(n), gens);
}

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

SimplicialComplex load_complex(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_complex(in);
}

std::string format_complex(const SimplicialComplex& k) {
  std::ostringstream out;
  out << "vertices " << k.vertex_count() << '\n';
  for (Simplex s : k.facets()) {
    out << "simplex";
    for (int v : s.indices()) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace cvxtop
