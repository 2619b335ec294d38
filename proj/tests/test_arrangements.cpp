#include <doctest.h>

#include <random>

#include "rfrp/arr/arrangement.hpp"
#include "rfrp/arr/group_fixtures.hpp"
#include "rfrp/errors.hpp"
#include "rfrp/linalg/abelian.hpp"

using namespace rfrp;
using arr::Rational;

namespace {
std::array<Rational, 3> L(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }
}  // namespace

TEST_CASE("incidence of small line arrangements") {
  auto tri = arr::incidence_from_lines({L(1, 0, 0), L(0, 1, 0), L(1, 1, -1)});
  CHECK(tri.points.size() == 3);
  CHECK(tri.connected);
  for (const auto& p : tri.points) CHECK(p.components.size() == 2);
  auto hex = arr::boundary_manifold(arr::lines_arrangement({L(1, 0, 0), L(0, 1, 0), L(1, 1, -1)}));
  CHECK(mfd::graph_girth(hex) == 6);
  CHECK(mfd::mv_h1(hex).h1.rank == 4);

  auto star = arr::incidence_from_lines({L(1, 0, 0), L(0, 1, 0), L(1, -1, 0)});
  REQUIRE(star.points.size() == 1);
  CHECK(star.points[0].components.size() == 3);
  CHECK((*star.points[0].coordinates)[0] == 0);

  auto par = arr::incidence_from_lines({L(1, 0, 0), L(1, 0, -1)});
  CHECK(par.points.empty());
  CHECK_FALSE(par.connected);
  CHECK_THROWS_AS(arr::boundary_manifold(arr::lines_arrangement({L(1, 0, 0), L(1, 0, -1)})), InputError);
  CHECK_THROWS_AS(arr::incidence_from_lines({L(1, 2, 3), L(2, 4, 6)}), InputError);
  CHECK_THROWS_AS(arr::incidence_from_lines({L(0, 0, 1)}), InputError);
}

TEST_CASE("fixture families: H1 through both routes") {
  CHECK(mfd::mv_h1(arr::boundary_manifold(arr::pencil(3))).h1.rank == 3);
  CHECK(mfd::mv_h1(arr::boundary_manifold(arr::generic_lines(3))).h1.rank == 4);
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : {arr::pencil(n), arr::generic_lines(n)}) {
      auto g = arr::boundary_manifold(a);
      auto mv = mfd::mv_h1(g);
      CHECK(linalg::abelianization(mfd::pi1_presentation(g)).same_type(mv.h1));
    }
  for (int n = 3; n <= 5; ++n) {
    auto g = arr::boundary_manifold(arr::near_pencil_affine(n));
    CHECK(linalg::abelianization(mfd::pi1_presentation(g)).same_type(mfd::mv_h1(g).h1));
    CHECK(mfd::graph_girth(g) == 6);
  }
  // Pencil boundary manifolds: H1 free on the lines.
  for (int n = 2; n <= 5; ++n) CHECK(mfd::mv_h1(arr::boundary_manifold(arr::pencil(n))).h1.rank == static_cast<std::size_t>(n));
  CHECK_THROWS_AS(arr::boundary_manifold(arr::pencil(1)), InputError);
  CHECK(arr::find_arrangement_fixture("near-pencil-affine4")->components.size() == 4);
  CHECK(arr::find_arrangement_fixture("generic5")->components.size() == 5);
  CHECK_FALSE(arr::find_arrangement_fixture("pencilx"));
}

TEST_CASE("random rational line arrangements") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> c(-4, 4);
  int built = 0;
  for (int trial = 0; trial < 200 && built < 20; ++trial) {
    std::vector<std::array<Rational, 3>> lines;
    const int n = 2 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) {
      auto l = L(c(rng), c(rng), c(rng));
      bool dup = l[0] == 0 && l[1] == 0;
      for (const auto& m : lines) dup = dup || (l[0] * m[1] == l[1] * m[0] && l[0] * m[2] == l[2] * m[0] && l[1] * m[2] == l[2] * m[1]);
      if (!dup) lines.push_back(l);
    }
    auto inc = arr::incidence_from_lines(lines);
    if (!inc.connected || lines.size() < 2) continue;
    ++built;
    auto g = arr::boundary_manifold(arr::lines_arrangement(lines), inc);
    CHECK(mfd::validate_class_x(g).ok());
    const auto gi = mfd::graph_girth(g);
    CHECK((gi == 0 || gi >= 6));
    // Rescaling coefficients changes nothing.
    auto scaled = lines;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      Rational f(static_cast<long>(i) + 2, 3);
      f.canonicalize();
      for (auto& x : scaled[i]) x *= f;
    }
    auto inc2 = arr::incidence_from_lines(scaled);
    REQUIRE(inc2.points.size() == inc.points.size());
    for (std::size_t k = 0; k < inc.points.size(); ++k) {
      CHECK(inc2.points[k].components == inc.points[k].components);
      CHECK(*inc2.points[k].coordinates == *inc.points[k].coordinates);
    }
    CHECK(linalg::abelianization(mfd::pi1_presentation(g)).same_type(mfd::mv_h1(g).h1));
  }
  CHECK(built == 20);
}

TEST_CASE("curves with declared incidence") {
  // Smooth affine conic meeting a line in two points.
  auto a = arr::arrangement_from_json(nlohmann::json::parse(
      R"({"lines":[["0","1","0"]],"curves":[{"degree":2}],"points":[[0,1],[0,1]]})"));
  auto g = arr::boundary_manifold(a);
  REQUIRE(g.vertices.size() == 4);
  CHECK(g.vertices[1].boundary == 4);
  CHECK(g.vertices[1].genus == 0);
  CHECK(mfd::validate_class_x(g).ok());
  CHECK(linalg::abelianization(mfd::pi1_presentation(g)).same_type(mfd::mv_h1(g).h1));
  auto cubic = arr::arrangement_from_json(nlohmann::json::parse(R"({"curves":[{"degree":3},{"degree":1}],"points":[[0,1],[0,1],[0,1]]})"));
  CHECK(arr::boundary_manifold(cubic).vertices[0].genus == 1);
  auto bad = arr::arrangement_from_json(nlohmann::json::parse(R"({"curves":[{"degree":2,"smooth":false},{"degree":1}],"points":[[0,1]]})"));
  CHECK_THROWS_AS(arr::boundary_manifold(bad), InputError);
  auto tang = arr::arrangement_from_json(nlohmann::json::parse(R"({"curves":[{"degree":2,"transverse_at_infinity":false},{"degree":1}],"points":[[0,1]]})"));
  CHECK_THROWS_AS(arr::boundary_manifold(tang), InputError);
  auto rt = arr::arrangement_from_json(arr::arrangement_to_json(a));
  CHECK(rt.components.size() == 2);
  CHECK(rt.declared_points.size() == 2);
}

TEST_CASE("smooth curve hint records") {
  for (int d = 1; d <= 5; ++d) {
    auto r = arr::smooth_curve(d);
    CHECK(r.hint.euler == d * d);
    CHECK(r.hint.genus == (d - 1) * (d - 2) / 2);
    filtration::BatteryHints h;
    h.circle_bundle = r.hint;
    auto rep = filtration::obstruction_battery(r.presentation, h);
    if (r.expected.empty())
      CHECK(rep.fired.empty());
    else
      CHECK_MESSAGE(rep.fires(r.expected), "d=" << d);
    CHECK(filtration::verify_report(r.presentation, filtration::to_json(rep)));
  }
  auto h1 = linalg::abelianization(arr::circle_bundle_presentation(3, 9));
  CHECK(h1.rank == 6);
  CHECK(h1.divisors == std::vector<linalg::BigInt>{9});
}

TEST_CASE("gallery") {
  auto g = arr::gallery();
  auto find = [&](const std::string& n) {
    for (const auto& e : g)
      if (e.name == n) return e;
    return arr::GalleryEntry{};
  };
  CHECK(find("heisenberg").expected == "RADICAL_NONTRIVIAL_EVIDENCE");
  CHECK(find("torus-knot-gluing").kind == "presentation");
  CHECK(linalg::abelianization(arr::find_group_fixture("torus-knot-gluing")->presentation).trivial());
  CHECK(find("pencil1").expected == "NO_GRAPH");
}
