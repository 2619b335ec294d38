#include <doctest.h>

#include "rfrp/arr/group_fixtures.hpp"
#include "rfrp/covers/homology_tower.hpp"
#include "rfrp/covers/reidemeister_schreier.hpp"
#include "rfrp/covers/stallings.hpp"
#include "rfrp/errors.hpp"
#include "rfrp/linalg/abelian.hpp"

using namespace rfrp;
using linalg::BigInt;

namespace {

const grp::Presentation& fx(const char* n) { return arr::find_group_fixture(n)->presentation; }

grp::AbelianHom cyclic_on_first(const grp::Presentation& g, long m) {
  std::vector<std::vector<BigInt>> im(static_cast<std::size_t>(g.n_generators()), {BigInt(0)});
  im[0][0] = 1;
  return grp::AbelianHom(g, {BigInt(m)}, im);
}

}  // namespace

TEST_CASE("Reidemeister-Schreier: Nielsen-Schreier ranks for free groups") {
  for (int n : {2, 3})
    for (long m : {2, 3, 4, 5, 6}) {
      auto g = arr::free_group(n);
      auto sub = covers::reidemeister_schreier(g, cyclic_on_first(g, m));
      CHECK(sub.table.index == static_cast<std::size_t>(m));
      CHECK(sub.schreier_generators == static_cast<std::size_t>(m * (n - 1) + 1));
      auto h1 = linalg::abelianization(sub.presentation);
      CHECK(h1.rank == static_cast<std::size_t>(m * (n - 1) + 1));
      CHECK(h1.divisors.empty());
      CHECK(sub.table.valid());
    }
}

TEST_CASE("Reidemeister-Schreier on Z^2 and Heisenberg") {
  auto z2 = fx("z2");
  auto sub = covers::reidemeister_schreier(z2, cyclic_on_first(z2, 2));
  auto h1 = linalg::abelianization(sub.presentation);
  CHECK(h1.rank == 2);
  CHECK(h1.divisors.empty());

  auto he = fx("heisenberg");
  auto k2 = covers::reidemeister_schreier(he, linalg::tf_mod_q_hom(he, 2));
  CHECK(k2.table.index == 4);
  auto a = linalg::abelianization(k2.presentation);
  CHECK(a.rank == 2);
  auto z = he.parse("z");
  CHECK(covers::membership(z, k2.table) == 0);
  auto zc = a.coordinates(k2.rewriter.rewrite(z, k2.table));
  for (std::size_t k = a.torsion_count(); k < zc.size(); ++k) CHECK(zc[k] == 0);
  CHECK(a.divisors == std::vector<BigInt>{4});
}

TEST_CASE("rewrite reproduces subgroup elements") {
  auto g = fx("surface2");
  auto sub = covers::reidemeister_schreier(g, linalg::tf_mod_q_hom(g, 2));
  CHECK(sub.table.index == 16);
  // Each simplified generator's ambient word rewrites to itself.
  for (std::size_t i = 0; i < sub.generator_words.size(); ++i) {
    auto w = sub.rewriter.rewrite(sub.generator_words[i], sub.table);
    CHECK(w == grp::Word::generator(static_cast<int>(i + 1)));
  }
  CHECK_THROWS_AS(sub.rewriter.rewrite(g.parse("a"), sub.table), InputError);
  CHECK(linalg::abelianization(sub.presentation).rank == 2 * (16 * 1 + 1));
}

TEST_CASE("index bound is reported, never truncated") {
  auto g = arr::free_group(2);
  covers::Bounds b;
  b.index = 3;
  CHECK_THROWS_AS(covers::reidemeister_schreier(g, linalg::tf_mod_q_hom(g, 2), b), ResourceLimit);
  b.index = 4096;
  b.generators = 4;
  CHECK_THROWS_AS(covers::reidemeister_schreier(g, linalg::tf_mod_q_hom(g, 2), b), ResourceLimit);
}

TEST_CASE("index multiplicativity") {
  auto g = arr::free_group(2);
  auto k2 = covers::reidemeister_schreier(g, cyclic_on_first(g, 2));
  auto k3 = covers::reidemeister_schreier(k2.presentation, cyclic_on_first(k2.presentation, 3));
  // the composite index is 6: x^6 is in the kernel, x^2 and x^3 are not
  CHECK(k2.table.index * k3.table.index == 6);
}

TEST_CASE("membership") {
  auto g = arr::free_group(2);
  auto sub = covers::reidemeister_schreier(g, cyclic_on_first(g, 2));
  CHECK(covers::membership(grp::Word(), sub.table) == 0);
  CHECK(covers::membership(g.parse("x"), sub.table) != 0);
  CHECK(covers::membership(g.parse("xx"), sub.table) == 0);
}

TEST_CASE("simplifier") {
  // <a,b,c,d | a, b c^-1, c d a d^-1 > -> <c, d | c d d^-1> ... c trivial as well
  auto s = covers::simplify(4, {grp::Word::reduce({1}), grp::Word::reduce({2, -3}), grp::Word::reduce({3, 4, 1, -4})});
  CHECK(s.generators == 1);
  CHECK(s.relators.empty());
  CHECK(s.substitution[0].empty());
  CHECK(s.substitution[1].empty());
  CHECK(s.substitution[3] == grp::Word::generator(1));
  // a b = 1 eliminates b as a^-1
  auto t = covers::simplify(2, {grp::Word::reduce({1, 2}), grp::Word::reduce({1, 1, 1})});
  CHECK(t.generators == 1);
  CHECK(t.substitution[1] == grp::Word::generator(-1));
  REQUIRE(t.relators.size() == 1);
  CHECK(t.relators[0].length() == 3);
}

TEST_CASE("p-homology covers and girth") {
  auto w2 = covers::StallingsGraph::wedge(2);
  auto c = covers::p_homology_cover(w2, 2);
  CHECK(c.vertices == 4);
  CHECK(c.edges.size() == 8);
  CHECK(c.betti() == 5);
  CHECK(c.folded());
  CHECK(c.euler_characteristic() == 4 * w2.euler_characteristic());

  auto c3 = covers::p_homology_cover(covers::StallingsGraph::wedge(1), 3);
  CHECK(c3.vertices == 3);
  CHECK(covers::girth(c3) == 3u);

  auto tri = covers::StallingsGraph::cycle(3);
  CHECK(covers::girth(tri) == 3u);
  CHECK(covers::girth(covers::p_homology_cover(tri, 2)).value() >= 4);

  CHECK(covers::girth(w2) == 1u);
  CHECK(covers::girth(covers::StallingsGraph::cycle(6)) == 6u);
  covers::StallingsGraph tree;
  tree.vertices = 3;
  tree.edges = {{0, 1, 1}, {1, 2, 2}};
  CHECK_FALSE(covers::girth(tree).has_value());

  covers::StallingsGraph unfolded;
  unfolded.vertices = 2;
  unfolded.edges = {{0, 1, 1}, {0, 0, 1}};
  CHECK_FALSE(unfolded.folded());
  CHECK(covers::to_dot(c3).find("v0 -> v1") != std::string::npos);
}

TEST_CASE("lazy tower matches explicit covers") {
  for (int p : {2, 3}) {
    auto base = covers::StallingsGraph::wedge(2);
    covers::HomologyTower tower(base, p, 3);
    auto explicit_cover = base;
    int explicit_levels = p == 2 ? 3 : 2;
    for (int k = 1; k <= explicit_levels; ++k) {
      if (k > 1) explicit_cover = covers::p_homology_cover(explicit_cover, p);
      CHECK(tower.girth(k, 10) == covers::girth(explicit_cover));
    }
  }
}

TEST_CASE("lazy tower agrees with Reidemeister-Schreier on free group membership") {
  auto g = arr::free_group(2);
  auto k2 = covers::reidemeister_schreier(g, linalg::tf_mod_q_hom(g, 2));
  covers::HomologyTower tower(covers::StallingsGraph::wedge(2), 2, 2);
  // every reduced word of length <= 4
  std::vector<grp::Word> words{grp::Word()};
  for (int len = 0; len < 4; ++len) {
    std::vector<grp::Word> next;
    for (const auto& w : words)
      if (static_cast<int>(w.length()) == len)
        for (int l : {1, -1, 2, -2}) {
          auto v = w * grp::Word::generator(l);
          if (static_cast<int>(v.length()) == len + 1) next.push_back(v);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& w : words) {
    if (w.empty()) continue;
    bool in_k2 = covers::membership(w, k2.table) == 0;
    auto d = tower.separation_depth(w);
    CHECK(in_k2 == (!d || *d >= 2));
    if (in_k2) {
      auto h1 = linalg::abelianization(k2.presentation);
      auto c = h1.coordinates(k2.rewriter.rewrite(w, k2.table));
      bool zero_mod2 = true;
      for (auto& x : c) zero_mod2 = zero_mod2 && x % 2 == 0;
      CHECK(zero_mod2 == !d.has_value());
    }
  }
}

TEST_CASE("girth tower for free groups") {
  for (int n : {2, 3})
    for (int p : {2, 3}) {
      covers::HomologyTower tower(covers::StallingsGraph::wedge(n), p, 5);
      for (int i = 1; i <= 5; ++i) {
        auto g = tower.girth(i, static_cast<std::size_t>(i) - 1);
        CHECK_FALSE(g.has_value());  // no cycle shorter than i
      }
    }
}
