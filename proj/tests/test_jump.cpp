#include <doctest.h>

#include <random>

#include "rfrp/arr/group_fixtures.hpp"
#include "rfrp/errors.hpp"
#include "rfrp/grp/fox.hpp"
#include "rfrp/jump/jump_loci.hpp"
#include "rfrp/linalg/abelian.hpp"

using namespace rfrp;
using jump::CharacterSpec;
using jump::GeneratorCharacter;

namespace {
const grp::Presentation& fx(const char* n) { return arr::find_group_fixture(n)->presentation; }

grp::AbelianHom cyclic(const grp::Presentation& g, long m, std::vector<long> images) {
  std::vector<std::vector<linalg::BigInt>> im;
  for (long v : images) im.push_back({linalg::BigInt(v)});
  return grp::AbelianHom(g, {linalg::BigInt(m)}, im);
}

// Oracle: evaluate the TF-coordinate Fox Jacobian monomial by monomial.
std::size_t dim_from_laurent(const grp::Presentation& g, const CharacterSpec& chi) {
  const auto fox = grp::fox_jacobian(g);
  std::vector<std::vector<jump::CycloElement>> m(fox.rows, std::vector<jump::CycloElement>(fox.cols, jump::CycloElement(chi.order, 0)));
  for (std::size_t r = 0; r < fox.rows; ++r)
    for (std::size_t c = 0; c < fox.cols; ++c)
      for (const auto& [mono, coef] : fox.at(r, c)) {
        long e = 0;
        for (std::size_t k = 0; k < mono.size(); ++k) e += mono[k] * chi.exponents[k];
        e = ((e % chi.order) + chi.order) % chi.order;
        m[r][c][e] += coef.get_si();
      }
  return g.n_generators() - 1 - jump::rank_exact(m, chi.order);
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(jump::cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(jump::cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(jump::cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient -2.
  auto p105 = jump::cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(std::count(p105.begin(), p105.end(), -2) == 2);
  for (int m : {3, 5, 7, 12, 30}) {
    auto qs = jump::primes_one_mod(m, 3);
    REQUIRE(qs.size() == 3);
    for (auto q : qs) {
      CHECK(q % m == 1);
      CHECK(linalg::is_prime(q));
      CHECK(jump::primitive_root_of_unity(m, q) != 1);
    }
  }
}

TEST_CASE("dim_h1_at examples") {
  CHECK(jump::dim_h1_at(fx("f2"), CharacterSpec{3, {1, 0}}) == 1);
  CHECK(jump::dim_h1_at(fx("f2"), CharacterSpec{3, {0, 0}}) == 2);
  CHECK(jump::dim_h1_at(fx("z2"), CharacterSpec{2, {1, 1}}) == 0);
  auto fox = jump::fox_at(fx("z2"), jump::on_generators(fx("z2"), CharacterSpec{2, {1, 1}}));
  REQUIRE(fox.size() == 1);
  CHECK(jump::dim_h1_at(fx("trefoil"), CharacterSpec{6, {1}}) == 1);
  CHECK(jump::dim_h1_at(fx("trefoil"), CharacterSpec{5, {1}}) == 0);
  CHECK_THROWS_AS(jump::dim_h1_at(fx("f2"), CharacterSpec{3, {1}}), InputError);
  CHECK_THROWS_AS(jump::dim_h1_at(fx("z2"), GeneratorCharacter{3, {1}}), InputError);
}

TEST_CASE("dim_h1_at: modular, exact and Laurent routes agree") {
  std::mt19937_64 rng(5);
  for (const char* name : {"f2", "f3", "z2", "z3", "surface2", "heisenberg", "trefoil", "raag-path", "zxf2", "g3"}) {
    const auto& g = fx(name);
    const std::size_t b = linalg::abelianization(g).rank;
    for (int m : {2, 3, 4, 5, 6, 7, 12}) {
      for (int trial = 0; trial < 6; ++trial) {
        CharacterSpec chi{m, std::vector<std::int64_t>(b)};
        for (auto& e : chi.exponents) e = static_cast<std::int64_t>(rng() % m);
        if (chi.trivial()) continue;
        auto gc = jump::on_generators(g, chi);
        const auto d = jump::dim_h1_at(g, chi);
        CHECK_MESSAGE(d == jump::dim_h1_exact(g, gc), name << " m=" << m);
        CHECK_MESSAGE(d == dim_from_laurent(g, chi), name << " m=" << m);
      }
    }
  }
}

TEST_CASE("dim_h1_at is constant on Galois orbits") {
  for (const char* name : {"trefoil", "surface2", "heisenberg", "raag-path"}) {
    const auto& g = fx(name);
    const std::size_t b = linalg::abelianization(g).rank;
    for (int m : {5, 6, 12}) {
      CharacterSpec chi{m, std::vector<std::int64_t>(b, 0)};
      chi.exponents[0] = 1;
      const auto d = jump::dim_h1_at(g, chi);
      for (int k = 1; k < m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        CharacterSpec c2 = chi;
        for (auto& e : c2.exponents) e = e * k % m;
        CHECK(jump::dim_h1_at(g, c2) == d);
      }
    }
  }
}

TEST_CASE("metabelian invariance of the jump dimensions") {
  const auto& f2 = fx("f2");
  auto aug = arr::make_presentation({"x", "y"}, {"[[x,y],[X,Y]]"});
  auto aug2 = arr::make_presentation({"x", "y"}, {"[[x,y],[X,Y]]", "[[x,y],[x,Y]]"});
  for (int m : {2, 3, 5})
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        CharacterSpec chi{m, {a, b}};
        const auto d = jump::dim_h1_at(f2, chi);
        CHECK(jump::dim_h1_at(aug, chi) == d);
        CHECK(jump::dim_h1_at(aug2, chi) == d);
      }
}

TEST_CASE("cover b1: predicted against Reidemeister-Schreier") {
  CHECK(jump::predicted_cover_b1(fx("f2"), cyclic(fx("f2"), 3, {1, 0})) == 4);
  CHECK(jump::predicted_cover_b1(fx("surface2"), cyclic(fx("surface2"), 2, {1, 0, 0, 0})) == 6);
  CHECK(jump::predicted_cover_b1(fx("z2"), cyclic(fx("z2"), 5, {1, 0})) == 2);
  CHECK(jump::oracle_cover_b1(fx("f2"), cyclic(fx("f2"), 3, {1, 0})) == 4);
  CHECK(jump::oracle_cover_b1(fx("z3"), cyclic(fx("z3"), 2, {1, 0, 0})) == 3);

  for (const char* name : {"f2", "f3", "z2", "z3", "surface2", "heisenberg", "trefoil", "raag-path", "zxf2", "g3"}) {
    const auto& g = fx(name);
    for (std::uint64_t q : {2, 3, 4, 5}) {
      auto h = linalg::tf_mod_q_hom(g, q);
      CHECK_MESSAGE(jump::predicted_cover_b1(g, h) == jump::oracle_cover_b1(g, h), name << " tf mod " << q);
    }
  }
  // Quotients through torsion of H1 and non-surjective maps.
  const auto& g3 = fx("g3");
  auto tors = cyclic(g3, 3, {1, 1, 0});
  CHECK(jump::predicted_cover_b1(g3, tors) == jump::oracle_cover_b1(g3, tors));
  auto lens = arr::make_presentation({"x", "y"}, {"x^3", "[x,y]"});
  auto h = cyclic(lens, 6, {2, 3});
  CHECK(jump::predicted_cover_b1(lens, h) == jump::oracle_cover_b1(lens, h));
  auto not_onto = cyclic(fx("f2"), 4, {2, 0});
  CHECK(jump::predicted_cover_b1(fx("f2"), not_onto) == 3);
  CHECK(jump::oracle_cover_b1(fx("f2"), not_onto) == 3);
  auto noncyclic = grp::AbelianHom(fx("f2"), {2, 2}, {{1, 0}, {0, 1}});
  CHECK(jump::predicted_cover_b1(fx("f2"), noncyclic, 2) == 5);
}

TEST_CASE("torsion point scan") {
  auto f2 = jump::torsion_point_scan(fx("f2"), {2, 3});
  CHECK(f2.size() == 11);
  for (const auto& r : f2) CHECK(r.dim_h1 == 1);
  CHECK(f2.front().character.order == 2);
  CHECK(jump::torsion_point_scan(fx("z2"), {2, 3, 5}).empty());
  auto t = jump::torsion_point_scan(fx("trefoil"), {6});
  REQUIRE(t.size() == 2);
  CHECK(t[0].character.exponents == std::vector<std::int64_t>{1});
  CHECK(t[1].character.exponents == std::vector<std::int64_t>{5});

  // Sampling is deterministic and parallel runs match serial ones.
  auto s1 = jump::torsion_point_scan(fx("f3"), {7}, 50, 1);
  auto s2 = jump::torsion_point_scan(fx("f3"), {7}, 50, 3);
  REQUIRE(s1.size() == s2.size());
  CHECK(!s1.empty());
  CHECK(s1.size() < 50);
  for (std::size_t i = 0; i < s1.size(); ++i) CHECK(s1[i].character.exponents == s2[i].character.exponents);
  // V_{i+1} inside V_i: membership index is the dimension.
  for (const auto& r : jump::torsion_point_scan(fx("f3"), {2, 3})) CHECK(r.memberships == 2);
}
