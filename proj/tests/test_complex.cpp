#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cvxtop/errors.hpp"
#include "cvxtop/gf2.hpp"
#include "cvxtop/homology.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cvxtop;

namespace {

SimplicialComplex cone(const SimplicialComplex& k) {
  const int apex = k.vertex_count();
  std::vector<Simplex> gens{Simplex{apex}};
  for (Simplex f : k.facets()) {
    f.insert(apex);
    gens.push_back(f);
  }
  return SimplicialComplex::closure(apex + 1, gens);
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<int>& perm) {
  std::vector<Simplex> gens;
  for (Simplex f : k.facets()) {
    Simplex g;
    for (int v : f.indices()) g.insert(perm[static_cast<std::size_t>(v)]);
    gens.push_back(g);
  }
  return SimplicialComplex::closure(k.vertex_count(), gens);
}

int reduced_euler(const SimplicialComplex& k) {
  int chi = -1;
  const auto f = k.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<int>(f[d]);
  return chi;
}

}  // namespace

TEST_CASE("gf2 rank and solve") {
  BitVector a(3), b(3), c(3);
  a.set(0);
  a.set(1);
  b.set(1);
  b.set(2);
  c = a;
  c ^= b;
  CHECK(gf2_rank({a, b, c}) == 2);
  BitVector rhs(3);
  rhs.set(0);
  rhs.set(2);
  auto sol = gf2_solve({a, b}, 3, rhs);
  REQUIRE(sol);
  CHECK(sol->particular.test(0));
  CHECK(sol->particular.test(1));
  CHECK(sol->kernel.empty());
  rhs.set(1);
  CHECK_FALSE(gf2_solve({a, b}, 3, rhs));
  auto sol2 = gf2_solve({a, b, c}, 3, c);
  REQUIRE(sol2);
  CHECK(sol2->kernel.size() == 1);
}

TEST_CASE("complex construction and io") {
  const auto k = SimplicialComplex::closure(4, {Simplex{0, 1, 2}, Simplex{2, 3}});
  CHECK(k.dimension() == 2);
  CHECK(k.f_vector() == std::vector<std::size_t>{4, 4, 1});
  CHECK(k.contains(Simplex{0, 2}));
  CHECK_FALSE(k.contains(Simplex{1, 3}));
  // Facets come in dimension order.
  CHECK(k.facets() == std::vector<Simplex>{Simplex{2, 3}, Simplex{0, 1, 2}});
  CHECK(parse_complex(format_complex(k)) == k);
  CHECK_THROWS_AS(SimplicialComplex::closure(3, {Simplex{0, 3}}), InputError);
  CHECK_THROWS_AS(parse_complex("vertices 2\nsimplex 0 2\n"), InputError);
  CHECK_THROWS_AS(parse_complex("simplex 0\n"), InputError);
  CHECK(SimplicialComplex(3).dimension() == -1);
}

TEST_CASE("chains") {
  const Chain e = make_chain(1, {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 1}});
  CHECK(e.simplices == std::vector<Simplex>{Simplex{1, 2}});
  const Chain cycle = make_chain(1, {Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
  CHECK(boundary(cycle).zero());
  CHECK(boundary(make_chain(1, {Simplex{0, 1}})) == make_chain(0, {Simplex{0}, Simplex{1}}));
  CHECK(support_vertices(cycle) == Simplex{0, 1, 2});
}

TEST_CASE("reduced betti examples") {
  CHECK(reduced_betti(fixtures::complex_file("boundary_triangle.sc")).values == std::vector<int>{0, 1});
  CHECK(reduced_betti(fixtures::complex_file("boundary_tetrahedron.sc")).values == std::vector<int>{0, 0, 1});
  CHECK(reduced_betti(fixtures::complex_file("rp2_6.sc")).values == std::vector<int>{0, 1, 1});
  CHECK(reduced_betti(fixtures::complex_file("torus_7.sc")).values == std::vector<int>{0, 2, 1});
  CHECK(reduced_betti(SimplicialComplex(4)).values.empty());
  CHECK(reduced_betti(SimplicialComplex(4))[0] == 0);
}

TEST_CASE("intersection subcomplexes, shatter and level") {
  const auto fam = load_family(fixtures::data("complexes/circle_family.scf"));
  CHECK(fam.size() == 2);
  CHECK(intersection_subcomplex(fam, Selector{0, 1}) == SimplicialComplex::closure(3, {Simplex{0, 1}}));
  CHECK(intersection_subcomplex(fam, Selector{0}) == fam.base);
  CHECK(intersection_subcomplex(fam, Selector{}) == fam.base);
  CHECK(shatter(fam, 1, 2).value().values == std::vector<int>{1, 1});
  CHECK(level_complexity(fam, 1).value() == 0);
  CHECK(level_complexity(fam, 2).value() == 1);

  const auto disjoint = parse_family(
      "vertices 2\nsimplex 0\nsimplex 1\nmember a\nmsimplex 0\nmember b\nmsimplex 1\n");
  CHECK(intersection_subcomplex(disjoint, Selector{0, 1}).empty());
  CHECK(shatter(disjoint, 0, 2).value().values == std::vector<int>{0, 0});

  const auto sphere = parse_family(
      "vertices 4\nsimplex 0 1 2\nsimplex 0 1 3\nsimplex 0 2 3\nsimplex 1 2 3\n"
      "member s\nmsimplex 0 1 2\nmsimplex 0 1 3\nmsimplex 0 2 3\nmsimplex 1 2 3\n");
  CHECK(shatter(sphere, 2, 1).value().values == std::vector<int>{1});

  const auto circle_only = parse_family(
      "vertices 3\nsimplex 0 1\nsimplex 1 2\nsimplex 0 2\nmember a\nmsimplex 0 1\nmsimplex 1 2\nmsimplex 0 2\n");
  CHECK(level_complexity(circle_only, 2).value() == 1);
  CHECK(level_complexity(circle_only, 1).value() == 0);
  const auto contractible = parse_family("vertices 3\nsimplex 0 1 2\nmember a\nmsimplex 0 1 2\n");
  CHECK(level_complexity(contractible, 3).value() == 0);

  CHECK_THROWS_AS(shatter(fam, 2, 1), InputError);
  CHECK_THROWS_AS(level_complexity(fam, 0), InputError);
  CHECK_THROWS_AS(parse_family("vertices 3\nsimplex 0 1\nmember a\nmsimplex 1 2\n"), InputError);
  CHECK(parse_family(format_family(fam)).members == fam.members);
}

TEST_CASE("skeleton and mu") {
  CHECK(skeleton_simplex(4, 1) == fixtures::complex_file("k5.sc"));
  CHECK(skeleton_simplex(3, 1) == fixtures::complex_file("k4.sc"));
  CHECK(skeleton_simplex(2, 2).f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(mu(fixtures::complex_file("k5.sc")) == 2);
  CHECK(mu(skeleton_simplex(2, 2)) == 1);
  CHECK(mu(SimplicialComplex::closure(2, {Simplex{0, 1}})) == 0);
  CHECK_FALSE(mu(SimplicialComplex::closure(1, {Simplex{0}})).has_value());
  CHECK(mu(skeleton_simplex(6, 2)) == 4);
}

TEST_CASE("homology properties on random complexes") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto k = fixtures::random_complex(rng, n, 1 + static_cast<int>(rng() % 6), 4);
    CAPTURE(format_complex(k));
    const auto b = reduced_betti(k);
    CHECK(b.values == oracle::reduced_betti(k));
    int alt = 0;
    for (std::size_t i = 0; i < b.values.size(); ++i) alt += (i % 2 ? -1 : 1) * b.values[i];
    CHECK(alt == reduced_euler(k));

    const auto c = reduced_betti(cone(k));
    for (int v : c.values) CHECK(v == 0);

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = relabel(k, perm);
    CHECK(reduced_betti(r) == b);
    CHECK(mu(r) == mu(k));
  }
}

TEST_CASE("disjoint unions add homology") {
  const auto circle = fixtures::complex_file("boundary_triangle.sc");
  const auto sphere = fixtures::complex_file("boundary_tetrahedron.sc");
  std::vector<Simplex> gens;
  for (Simplex f : circle.facets()) gens.push_back(f);
  for (Simplex f : sphere.facets()) gens.push_back(Simplex(f.bits() << 3));
  gens.push_back(Simplex{7});
  const auto u = SimplicialComplex::closure(8, gens);
  CHECK(reduced_betti(u).values == std::vector<int>{2, 1, 1});
}

TEST_CASE("shatter is monotone and matches level at full size") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const auto base = fixtures::random_complex(rng, n, 4, 3);
    SubcomplexFamily fam{base, {}, {}};
    const auto facets = base.facets();
    const int members = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < members; ++j) {
      std::vector<Simplex> pick;
      for (Simplex f : facets)
        if (rng() % 2) pick.push_back(f);
      fam.names.push_back("m" + std::to_string(j));
      fam.members.push_back(SimplicialComplex::closure(n, pick));
    }
    const int dim = base.dimension();
    for (int h = 0; h <= dim; ++h) {
      const auto p = shatter(fam, h, members).value();
      for (int k = 2; k <= members; ++k) CHECK(p.at(k) >= p.at(k - 1));
      if (h > 0) CHECK(p.at(members) >= shatter(fam, h - 1, members).value().at(members));
      // Level h+1 counts the same indices 0..h.
      CHECK(level_complexity(fam, h + 1).value() == p.at(members));
    }
  }
}
