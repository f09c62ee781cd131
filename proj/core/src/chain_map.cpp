#include "cvxtop/chain_map.hpp"

#include <sstream>

#include "cvxtop/errors.hpp"
#include "cvxtop/gf2.hpp"
#include "text_io.hpp"

namespace cvxtop {
namespace {

std::string show(Simplex s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.indices()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void check_well_formed(const ChainMap& f) {
  const int dim = f.source.dimension();
  if (static_cast<int>(f.images.size()) != dim + 1)
    throw InputError("chain map: image table does not match source dimension");
  for (int d = 0; d <= dim; ++d) {
    const auto& faces = f.source.faces(d);
    const auto& imgs = f.images[static_cast<std::size_t>(d)];
    if (imgs.size() != faces.size()) throw InputError("chain map: missing face images");
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (imgs[i].dim != d)
        throw InputError("chain map: image of " + show(faces[i]) + " has the wrong dimension");
      for (Simplex s : imgs[i].simplices)
        if (simplex_dim(s) != d || !f.target.contains(s))
          throw InputError("chain map: image of " + show(faces[i]) + " uses " + show(s) +
                           ", not a " + std::to_string(d) + "-face of the target");
    }
  }
}

// Sum of images of the facets of a face.
Chain image_of_boundary(const ChainMap& f, Simplex face) {
  Chain acc{simplex_dim(face) - 1, {}};
  for (std::uint64_t b = face.bits(); b; b &= b - 1) acc = acc + f.image(face ^ Simplex(b & -b));
  return acc;
}

class HaeSearch {
 public:
  HaeSearch(const SimplicialComplex& k, const SimplicialComplex& l, std::uint64_t budget)
      : k_(k), l_(l), budget_(budget) {
    for (int d = 0; d <= k.dimension(); ++d)
      for (Simplex s : k.faces(d)) slots_.push_back({s, {}});
    for (std::size_t i = 0; i < slots_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!slots_[i].face.intersects(slots_[j].face)) slots_[i].earlier_disjoint.push_back(j);
    vertex_slots_ = k.faces(0).size();
    images_.resize(slots_.size());
    supports_.resize(slots_.size());
  }

  SearchOutcome run() {
    SearchOutcome out;
    const bool found = assign(0);
    out.nodes_explored = budget_.used();
    if (stopped_) {
      out.tag = SearchOutcome::Tag::budget_exceeded;
    } else if (found) {
      out.tag = SearchOutcome::Tag::found;
      out.map = certificate();
    } else {
      out.tag = SearchOutcome::Tag::exhausted_none;
    }
    return out;
  }

 private:
  struct Slot {
    Simplex face;
    std::vector<std::size_t> earlier_disjoint;
  };

  bool charge() {
    if (budget_.spend()) return true;
    stopped_ = true;
    return false;
  }

  bool assign(std::size_t i) {
    if (i == slots_.size()) return true;
    Simplex forbidden;
    for (auto j : slots_[i].earlier_disjoint) forbidden |= supports_[j];
    const Simplex face = slots_[i].face;
    return face.size() == 1 ? assign_vertex(i, forbidden) : assign_face(i, face, forbidden);
  }

  bool assign_vertex(std::size_t i, Simplex forbidden) {
    const std::uint64_t avail = l_.vertices().minus(forbidden).bits();
    // Distinct source vertices need pairwise disjoint, nonempty images.
    if (static_cast<std::size_t>(std::popcount(avail)) < vertex_slots_ - i) return false;
    for (std::uint64_t s = (0 - avail) & avail; s != 0; s = (s - avail) & avail) {
      if (std::popcount(s) % 2 == 0) continue;
      if (!charge()) return false;
      std::vector<Simplex> pts;
      for (std::uint64_t b = s; b; b &= b - 1) pts.emplace_back(b & -b);
      images_[i] = Chain{0, std::move(pts)};
      supports_[i] = Simplex(s);
      if (assign(i + 1)) return true;
      if (stopped_) return false;
    }
    return false;
  }

  bool assign_face(std::size_t i, Simplex face, Simplex forbidden) {
    const int d = simplex_dim(face);
    Chain target{d - 1, {}};
    for (std::uint64_t b = face.bits(); b; b &= b - 1)
      target = target + images_[index_of(face ^ Simplex(b & -b))];
    // Candidate d-simplices of l avoiding the forbidden vertices.
    std::vector<Simplex> cols;
    for (Simplex s : l_.faces(d))
      if (!s.intersects(forbidden)) cols.push_back(s);
    const auto& rows = l_.faces(d - 1);
    BitVector rhs(rows.size());
    for (Simplex s : target.simplices) rhs.set(*l_.index_of(s));
    std::vector<BitVector> columns;
    for (Simplex s : cols) {
      BitVector c(rows.size());
      for (std::uint64_t b = s.bits(); b; b &= b - 1) c.set(*l_.index_of(s ^ Simplex(b & -b)));
      columns.push_back(std::move(c));
    }
    if (!charge()) return false;
    auto sol = gf2_solve(columns, rows.size(), rhs);
    if (!sol) return false;
    const std::size_t free = sol->kernel.size();
    if (free >= 63) {
      stopped_ = true;  // cannot be enumerated within any budget
      return false;
    }
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free); ++pick) {
      if (!charge()) return false;
      BitVector x = sol->particular;
      for (std::size_t j = 0; j < free; ++j)
        if (pick >> j & 1u) x ^= sol->kernel[j];
      std::vector<Simplex> chosen;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (x.test(c)) chosen.push_back(cols[c]);
      images_[i] = make_chain(d, std::move(chosen));
      supports_[i] = support_vertices(images_[i]);
      if (assign(i + 1)) return true;
      if (stopped_) return false;
    }
    return false;
  }

  std::size_t index_of(Simplex face) const {
    std::size_t offset = 0;
    for (int d = 0; d < simplex_dim(face); ++d) offset += k_.faces(d).size();
    return offset + *k_.index_of(face);
  }

  ChainMap certificate() const {
    ChainMap f{k_, l_, {}};
    f.images.resize(static_cast<std::size_t>(k_.dimension() + 1));
    for (std::size_t i = 0; i < slots_.size(); ++i)
      f.images[static_cast<std::size_t>(simplex_dim(slots_[i].face))].push_back(images_[i]);
    return f;
  }

  const SimplicialComplex& k_;
  const SimplicialComplex& l_;
  Budget budget_;
  std::vector<Slot> slots_;
  std::size_t vertex_slots_ = 0;
  std::vector<Chain> images_;
  std::vector<Simplex> supports_;
  bool stopped_ = false;
};

}  // namespace

const Chain& ChainMap::image(Simplex face) const {
  auto idx = source.index_of(face);
  const auto d = static_cast<std::size_t>(simplex_dim(face));
  if (!idx || d >= images.size() || *idx >= images[d].size())
    throw InputError("chain map: no image for face " + show(face));
  return images[d][*idx];
}

bool verify_chain_map(const ChainMap& f) {
  check_well_formed(f);
  for (int d = 1; d <= f.source.dimension(); ++d)
    for (Simplex s : f.source.faces(d))
      if (boundary(f.image(s)) != image_of_boundary(f, s)) return false;
  return true;
}

HaeVerdict verify_hae(const ChainMap& f) {
  HaeVerdict v;
  if (!verify_chain_map(f)) {
    v.status = HaeVerdict::Status::not_chain_map;
    for (int d = 1; d <= f.source.dimension() && !v.faces; ++d)
      for (Simplex s : f.source.faces(d))
        if (boundary(f.image(s)) != image_of_boundary(f, s)) {
          v.faces = std::pair{s, s};
          v.diagnostic = "boundary of the image of " + show(s) +
                         " differs from the image of its boundary";
          break;
        }
    return v;
  }
  for (Simplex s : f.source.faces(0)) {
    if (f.image(s).simplices.size() % 2 == 0) {
      v.status = HaeVerdict::Status::even_vertex_support;
      v.faces = std::pair{s, s};
      v.diagnostic = "image of vertex " + show(s) + " has support of even size " +
                     std::to_string(f.image(s).simplices.size());
      return v;
    }
  }
  std::vector<Simplex> faces;
  std::vector<Simplex> supports;
  for (int d = 0; d <= f.source.dimension(); ++d)
    for (Simplex s : f.source.faces(d)) {
      faces.push_back(s);
      supports.push_back(support_vertices(f.image(s)));
    }
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j)
      if (!faces[i].intersects(faces[j]) && supports[i].intersects(supports[j])) {
        v.status = HaeVerdict::Status::overlapping_supports;
        v.faces = std::pair{faces[i], faces[j]};
        v.diagnostic = "non-adjacent faces " + show(faces[i]) + " and " + show(faces[j]) +
                       " have images sharing vertices " + show(supports[i] & supports[j]);
        return v;
      }
  return v;
}

const char* to_string(SearchOutcome::Tag tag) {
  switch (tag) {
    case SearchOutcome::Tag::found: return "Found";
    case SearchOutcome::Tag::exhausted_none: return "ExhaustedNone";
    case SearchOutcome::Tag::budget_exceeded: return "BudgetExceeded";
  }
  return "?";
}

SearchOutcome search_hae(const SimplicialComplex& k, const SimplicialComplex& l,
                         std::uint64_t budget) {
  if (k.dimension() > l.dimension())
    throw InputError("search_hae: dim K = " + std::to_string(k.dimension()) + " exceeds dim L = " +
                     std::to_string(l.dimension()));
  HaeSearch search(k, l, budget);
  return search.run();
}

ChainMap induced_map(const SimplicialComplex& source, const SimplicialComplex& target,
                     const std::vector<int>& vertex_map) {
  ChainMap f{source, target, {}};
  f.images.resize(static_cast<std::size_t>(source.dimension() + 1));
  for (int d = 0; d <= source.dimension(); ++d)
    for (Simplex s : source.faces(d)) {
      Simplex img;
      for (int v : s.indices()) {
        if (v >= static_cast<int>(vertex_map.size())) throw InputError("induced_map: vertex not mapped");
        img.insert(vertex_map[static_cast<std::size_t>(v)]);
      }
      Chain c{d, {}};
      if (img.size() == s.size()) {
        if (!target.contains(img)) throw InputError("induced_map: " + show(img) + " is not a target face");
        c.simplices.push_back(img);
      }
      f.images[static_cast<std::size_t>(d)].push_back(std::move(c));
    }
  return f;
}

ChainMap restrict_map(const ChainMap& f, const SimplicialComplex& sub) {
  if (!sub.subcomplex_of(f.source)) throw InputError("restrict_map: not a subcomplex of the source");
  ChainMap g{sub, f.target, {}};
  g.images.resize(static_cast<std::size_t>(sub.dimension() + 1));
  for (int d = 0; d <= sub.dimension(); ++d)
    for (Simplex s : sub.faces(d)) g.images[static_cast<std::size_t>(d)].push_back(f.image(s));
  return g;
}

ChainMap parse_chain_map(std::istream& in, const SimplicialComplex& source,
                         const SimplicialComplex& target) {
  auto lines = detail::read_lines(in);
  std::vector<std::vector<std::optional<Chain>>> slots(static_cast<std::size_t>(source.dimension() + 1));
  for (int d = 0; d <= source.dimension(); ++d) slots[static_cast<std::size_t>(d)].resize(source.faces(d).size());
  for (const auto& line : lines) {
    const auto& tok = line.tokens;
    if (tok[0] != "face") detail::fail(line.number, "unknown directive '" + tok[0] + "'");
    std::size_t i = 1;
    Simplex face;
    for (; i < tok.size() && tok[i] != "->"; ++i) {
      const auto v = detail::parse_int(tok[i], line.number);
      if (v < 0 || v >= source.vertex_count()) detail::fail(line.number, "source vertex out of range");
      face.insert(static_cast<int>(v));
    }
    if (i == tok.size()) detail::fail(line.number, "missing '->'");
    auto idx = source.index_of(face);
    if (!idx) detail::fail(line.number, show(face) + " is not a face of the source");
    const int d = simplex_dim(face);
    std::vector<Simplex> simplices;
    Simplex cur;
    auto flush = [&] {
      if (cur.empty()) return;
      if (simplex_dim(cur) != d) detail::fail(line.number, "image simplex " + show(cur) + " has the wrong dimension");
      if (!target.contains(cur)) detail::fail(line.number, show(cur) + " is not a face of the target");
      simplices.push_back(cur);
      cur = Simplex{};
    };
    for (++i; i < tok.size(); ++i) {
      if (tok[i] == ";") {
        if (cur.empty()) detail::fail(line.number, "empty image simplex");
        flush();
        continue;
      }
      const auto v = detail::parse_int(tok[i], line.number);
      if (v < 0 || v >= target.vertex_count()) detail::fail(line.number, "target vertex out of range");
      cur.insert(static_cast<int>(v));
    }
    flush();
    auto& slot = slots[static_cast<std::size_t>(d)][*idx];
    if (slot) detail::fail(line.number, "duplicate image for " + show(face));
    slot = make_chain(d, std::move(simplices));
  }
  ChainMap f{source, target, {}};
  f.images.resize(slots.size());
  for (int d = 0; d <= source.dimension(); ++d)
    for (std::size_t i = 0; i < slots[static_cast<std::size_t>(d)].size(); ++i) {
      auto& slot = slots[static_cast<std::size_t>(d)][i];
      if (!slot) throw InputError("chain map: no image given for face " + show(source.faces(d)[i]));
      f.images[static_cast<std::size_t>(d)].push_back(std::move(*slot));
    }
  return f;
}

ChainMap parse_chain_map(const std::string& text, const SimplicialComplex& source,
                         const SimplicialComplex& target) {
  std::istringstream in(text);
  return parse_chain_map(in, source, target);
}

ChainMap load_chain_map(const std::string& path, const SimplicialComplex& source,
                        const SimplicialComplex& target) {
  auto in = detail::open_input(path);
  return parse_chain_map(in, source, target);
}

std::string format_chain_map(const ChainMap& f) {
  std::ostringstream out;
  for (int d = 0; d <= f.source.dimension(); ++d) {
    const auto& faces = f.source.faces(d);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      out << "face";
      for (int v : faces[i].indices()) out << ' ' << v;
      out << " ->";
      const auto& img = f.images[static_cast<std::size_t>(d)][i].simplices;
      for (std::size_t j = 0; j < img.size(); ++j) {
        if (j) out << " ;";
        for (int v : img[j].indices()) out << ' ' << v;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace cvxtop
