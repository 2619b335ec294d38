#include <doctest.h>

#include <random>

#include "rfrp/arr/group_fixtures.hpp"
#include "rfrp/errors.hpp"
#include "rfrp/filtration/separation.hpp"

using namespace rfrp;
using filtration::Method;

namespace {
const grp::Presentation& fx(const char* n) { return arr::find_group_fixture(n)->presentation; }
}  // namespace

TEST_CASE("separate: heisenberg center stays inconclusive with torsion evidence") {
  const auto& g = fx("heisenberg");
  for (int p : {2, 3}) {
    auto r = filtration::separate(g, g.parse("z"), p, 3);
    CHECK_FALSE(r.separated);
    CHECK(r.depth == 3);
    REQUIRE(r.evidence.size() == 3);
    for (const auto& e : r.evidence) {
      CHECK(e.torsion);
      for (auto v : e.layer_image) CHECK(v == 0);
    }
    // z is torsion but nonzero in H1(K_2)
    bool some_nonzero = false;
    for (const auto& c : r.evidence[1].h1_image) some_nonzero = some_nonzero || c != 0;
    CHECK(some_nonzero);
  }
}

TEST_CASE("separate: certified examples") {
  auto x = filtration::separate(fx("heisenberg"), fx("heisenberg").parse("x"), 2, 3);
  CHECK(x.separated);
  CHECK(x.depth == 1);
  CHECK(x.quotient_order == 4);

  const auto& raag = fx("raag-path");
  auto ac = filtration::separate(raag, raag.parse("[a,c]"), 2, 3);
  CHECK(ac.separated);
  CHECK(ac.depth == 2);

  const auto& g3 = fx("g3");
  auto a3 = filtration::separate(g3, g3.parse("a"), 3, 3);
  CHECK(a3.separated);
  CHECK(a3.depth == 2);
  auto a2 = filtration::separate(g3, g3.parse("a"), 2, 3);
  CHECK_FALSE(a2.separated);
  for (const auto& e : a2.evidence) CHECK(e.torsion);
}

TEST_CASE("separate: trefoil commutator lies deep") {
  const auto& t = fx("trefoil");
  auto r = filtration::separate(t, t.parse("[x,y]"), 2, 3);
  CHECK_FALSE(r.separated);
  CHECK(r.depth == 3);
}

TEST_CASE("separate: tower and coset tables agree on free groups") {
  const auto& f2 = fx("f2");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<grp::Letter> ls;
    int len = 1 + trial % 8;
    for (int i = 0; i < len; ++i) {
      int l = letter(rng);
      ls.push_back(l < 2 ? l + 1 : -(l - 1));
    }
    auto w = grp::Word::reduce(ls);
    if (w.empty()) continue;
    auto a = filtration::separate(f2, w, 2, 3, {}, Method::ReidemeisterSchreier);
    auto b = filtration::separate(f2, w, 2, 3, {}, Method::HomologyTower);
    CHECK(a.separated == b.separated);
    CHECK(a.depth == b.depth);
  }
  // Only the tower reaches depth 4 here.
  auto deep = filtration::separate_in_free_group(2, f2.parse("[[x,y],[x,Y]]"), 2, 6);
  CHECK(deep.separated);
  CHECK(deep.depth >= 3);
}

TEST_CASE("separate: identity and bad input are rejected") {
  const auto& g = fx("heisenberg");
  CHECK_THROWS_AS(filtration::separate(g, grp::Word(), 2, 2), InputError);
  CHECK_THROWS_AS(filtration::separate(g, grp::Word::reduce({5}), 2, 2), InputError);
  CHECK_THROWS_AS(filtration::separate(g, g.parse("x"), 2, 2, {}, Method::HomologyTower), InputError);
}

TEST_CASE("replay: certificates round trip and tampering is caught") {
  const auto& raag = fx("raag-path");
  auto r = filtration::separate(raag, raag.parse("[a,c]"), 2, 3);
  auto j = filtration::to_json(r, raag);
  auto ok = filtration::replay(nlohmann::json::parse(j.dump()));
  CHECK_MESSAGE(ok.ok, ok.detail);

  auto bad_image = j;
  bad_image["image"] = "1";
  CHECK_FALSE(filtration::replay(bad_image).ok);

  auto bad_word = j;
  bad_word["word_letters"] = std::vector<int>{1, 3, -1, -3, 1, 3, -1, -3};
  CHECK_FALSE(filtration::replay(bad_word).ok);

  auto bad_delta = j;
  bool changed = false;
  for (auto& row : bad_delta["deltas"])
    for (auto& cell : row)
      if (!changed && !cell.empty()) {
        cell.clear();
        changed = true;
      }
  REQUIRE(changed);
  CHECK_FALSE(filtration::replay(bad_delta).ok);

  const auto& f2 = fx("f2");
  auto t = filtration::separate(f2, f2.parse("[x,y]"), 2, 4);
  auto tj = filtration::to_json(t, f2);
  CHECK(filtration::replay(tj).ok);
  tj["depth"] = t.depth + 1;
  CHECK_FALSE(filtration::replay(tj).ok);

  auto inconclusive = filtration::to_json(filtration::separate(fx("trefoil"), fx("trefoil").parse("[x,y]"), 2, 2), fx("trefoil"));
  CHECK_FALSE(filtration::replay(inconclusive).ok);
}

TEST_CASE("replay: heisenberg and g3 certificates at several primes") {
  for (const char* name : {"heisenberg", "g3", "zxf2", "surface2"}) {
    const auto& g = fx(name);
    for (int p : {2, 3}) {
      for (int gen = 1; gen <= g.n_generators(); ++gen) {
        auto r = filtration::separate(g, grp::Word::reduce({gen}), p, 2);
        if (!r.separated) continue;
        auto out = filtration::replay(filtration::to_json(r, g));
        CHECK_MESSAGE(out.ok, name << " p=" << p << " gen " << gen << ": " << out.detail);
      }
    }
  }
}
