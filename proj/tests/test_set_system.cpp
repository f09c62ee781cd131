#include <doctest.h>

#include <random>

#include "cvxtop/errors.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cvxtop;

TEST_CASE("hull examples") {
  const auto f = fixtures::star();
  CHECK(hull(f, ElementSet{0}) == ElementSet{0});
  CHECK(hull(f, ElementSet{0, 1, 2}) == ElementSet{0, 1, 2});
  CHECK(hull(fixtures::single(2), ElementSet{}) == ElementSet{0, 1});
  CHECK_THROWS_AS(hull(f, ElementSet{5}), InputError);
}

TEST_CASE("clique predicates") {
  const auto f = fixtures::star();
  CHECK_FALSE(is_clique(f, f.all()));
  CHECK(is_clique(f, Selector{0, 1}));
  CHECK(is_clique(f, Selector{}));
  CHECK(is_cwise_clique(f, f.all(), 2));
  CHECK_FALSE(is_cwise_clique(f, f.all(), 3));
  CHECK(is_cwise_clique(f, f.all(), 1));
  CHECK_THROWS_AS(is_cwise_clique(f, f.all(), 0), InputError);

  // Fewer members than c: the selector itself must intersect.
  const SetSystem disjoint(2, {ElementSet{0}, ElementSet{1}});
  CHECK_FALSE(is_cwise_clique(disjoint, disjoint.all(), 3));
  const SetSystem empty_member(2, {ElementSet{}});
  CHECK_FALSE(is_clique(empty_member, Selector{0}));
}

TEST_CASE("restrict") {
  const auto f = fixtures::star();
  const auto r = restrict(f, Selector{0, 1});
  CHECK(r.ground_size() == 3);
  CHECK(r.members() == std::vector<ElementSet>{ElementSet{0, 1}, ElementSet{0, 2}});
  CHECK(restrict(f, Selector{}).size() == 0);
  CHECK(restrict(f, f.all()) == f);
  CHECK_THROWS_AS(restrict(f, Selector{3}), InputError);
}

TEST_CASE("set system validation and parsing") {
  CHECK_THROWS_AS(SetSystem(0, {}), InputError);
  CHECK_THROWS_AS(SetSystem(2, {ElementSet{2}}), InputError);
  CHECK_THROWS_AS(parse_set_system("ground 2\nset 0 2\n"), InputError);
  CHECK_THROWS_AS(parse_set_system("ground 2\nmember 0\n"), InputError);
  CHECK_THROWS_AS(parse_set_system("set 0\n"), InputError);
  CHECK_THROWS_AS(parse_set_system("ground x\n"), InputError);
  CHECK_THROWS_AS(parse_set_system(""), InputError);
  const auto f = parse_set_system("# c\nground 3 # n\nset\nset 2 0\nset 2 0\n");
  CHECK(f.size() == 3);
  CHECK(f.member(0).empty());
  CHECK(f.member(1) == ElementSet{0, 2});
  CHECK(parse_set_system(format_set_system(f)) == f);
}

TEST_CASE("hull properties on random systems") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto f = random_system(rng, n, static_cast<int>(rng() % 7));
    const auto fam = oracle::family(f);
    for (std::uint64_t p = 0; p < (1u << n); ++p) {
      const ElementSet ps(p);
      const auto h = hull(f, ps);
      CHECK(oracle::to_set(h) == oracle::hull(n, fam, oracle::to_set(ps)));
      CHECK(ps.subset_of(h));
      CHECK(hull(f, h) == h);
      for (std::uint64_t q = p; q < (1u << n); q = (q + 1) | p) CHECK(h.subset_of(hull(f, ElementSet(q))));
    }
    // Duplicating a member changes no hull and no clique verdict.
    if (f.size() > 0 && f.size() < 64) {
      auto members = f.members();
      members.push_back(members.front());
      const SetSystem g(n, members);
      for (std::uint64_t p = 0; p < (1u << n); ++p) CHECK(hull(g, ElementSet(p)) == hull(f, ElementSet(p)));
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << f.size()); ++s) {
        CHECK(is_clique(g, Selector(s)) == is_clique(f, Selector(s)));
        CHECK(is_clique(g, Selector(s | (s & 1) << f.size())) == is_clique(f, Selector(s)));
      }
    }
    // c-wise cliques: implied by cliques, decreasing in c.
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << f.size()); ++s)
      for (int c = 1; c <= 4; ++c) {
        if (is_clique(f, Selector(s))) CHECK(is_cwise_clique(f, Selector(s), c));
        if (is_cwise_clique(f, Selector(s), c + 1)) CHECK(is_cwise_clique(f, Selector(s), c));
      }
  }
}
