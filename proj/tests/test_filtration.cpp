#include <doctest.h>

#include "rfrp/arr/group_fixtures.hpp"
#include "rfrp/errors.hpp"
#include "rfrp/filtration/filtration.hpp"

using namespace rfrp;
using linalg::BigInt;

namespace {
const grp::Presentation& fx(const char* n) { return arr::find_group_fixture(n)->presentation; }

std::vector<std::size_t> indices(const filtration::Filtration& f) {
  std::vector<std::size_t> out;
  for (int i = 1; i <= f.depth(); ++i) out.push_back(f.level(i).index());
  return out;
}
}  // namespace

TEST_CASE("filtrate: indices of fixture filtrations") {
  CHECK(indices(filtration::filtrate(fx("f2"), 2, 3)) == std::vector<std::size_t>{1, 4, 128});
  CHECK(indices(filtration::filtrate(fx("z3"), 3, 2)) == std::vector<std::size_t>{1, 27});
  CHECK(indices(filtration::filtrate(fx("g3"), 3, 2)) == std::vector<std::size_t>{1, 3});
  CHECK(indices(filtration::filtrate(fx("g3"), 2, 3)) == std::vector<std::size_t>{1, 2, 4});
  CHECK(indices(filtration::filtrate(fx("heisenberg"), 2, 2)) == std::vector<std::size_t>{1, 4});
  CHECK(indices(filtration::filtrate(fx("heisenberg"), 3, 2)) == std::vector<std::size_t>{1, 9});
  CHECK(indices(filtration::filtrate(fx("trefoil"), 2, 3)) == std::vector<std::size_t>{1, 2, 4});
}

TEST_CASE("rfrp_step examples") {
  for (int p : {2, 3, 5}) {
    auto f = filtration::filtrate(fx("z2"), p, 2);
    CHECK(f.level(2).h1.rank == 2);
    CHECK(f.level(2).h1.divisors.empty());
    CHECK(f.level(1).layer.divisors == std::vector<BigInt>(2, BigInt(p)));
  }
  auto he = filtration::filtrate(fx("heisenberg"), 2, 2);
  auto z = fx("heisenberg").parse("z");
  CHECK(he.contains(z, 2));
  auto c = he.level(2).h1.coordinates(he.rewrite(z, 2));
  for (std::size_t k = he.level(2).h1.torsion_count(); k < c.size(); ++k) CHECK(c[k] == 0);
  auto f2 = filtration::filtrate(fx("f2"), 2, 2);
  CHECK(f2.level(2).h1.rank == 5);
  CHECK(f2.level(2).presentation.relators().empty());
}

TEST_CASE("layers are elementary abelian and levels nested and normal") {
  for (const char* name : {"f2", "z2", "heisenberg", "trefoil", "g3", "raag-path", "zxf2", "surface2"})
    for (int p : {2, 3}) {
      filtration::Filtration f(fx(name), p);
      for (int d = 2; d <= 3; ++d) {
        try {
          f.extend_to(d);
        } catch (const ResourceLimit&) {
          break;
        }
      }
      CHECK(f.depth() >= 2);
      for (int i = 1; i <= f.depth(); ++i) {
        CHECK(f.checks(i).layer_elementary);
        CHECK(f.checks(i).nested);
        CHECK(f.checks(i).normal);
        CHECK(f.level(i).table.valid());
        if (i > 1) {
          BigInt expected = BigInt(static_cast<unsigned long>(f.level(i - 1).index()));
          for (std::size_t k = 0; k < f.level(i - 1).layer_rank(); ++k) expected *= p;
          CHECK(BigInt(static_cast<unsigned long>(f.level(i).index())) == expected);
        }
      }
    }
}

TEST_CASE("direct product compatibility for Z x F2") {
  for (int p : {2, 3}) {
    int d = p == 2 ? 3 : 2;
    auto g = filtration::filtrate(fx("zxf2"), p, d);
    auto z = filtration::filtrate(arr::free_abelian(1), p, d);
    auto f = filtration::filtrate(fx("f2"), p, d);
    CHECK(g.quotient_order(d) == z.quotient_order(d) * f.quotient_order(d));
    CHECK(g.quotient_order(d + 1) == z.quotient_order(d + 1) * f.quotient_order(d + 1));
  }
}

TEST_CASE("resource bound on filtration index") {
  covers::Bounds b;
  b.index = 100;
  CHECK_THROWS_AS(filtration::filtrate(fx("f2"), 2, 3, b), ResourceLimit);
}
