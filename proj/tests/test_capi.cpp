#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfrp/rfrp.h"

using nlohmann::json;

namespace {

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  rfrp_string_free(s);
  return j;
}

rfrp_group* fixture(const char* name) {
  rfrp_group* g = nullptr;
  REQUIRE(rfrp_group_from_fixture(name, &g) == RFRP_OK);
  return g;
}

}  // namespace

TEST_CASE("version and fixtures") {
  CHECK(std::string(rfrp_version()) == "0.1.0");
  char* s = nullptr;
  REQUIRE(rfrp_fixtures(&s) == RFRP_OK);
  json list = take(s);
  std::vector<std::string> names;
  for (const auto& e : list) names.push_back(e.at("name"));
  for (const char* n : {"f2", "heisenberg", "trefoil", "g3", "raag-path", "torus-knot-gluing", "pencil1"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

TEST_CASE("groups: fixtures, JSON and error codes") {
  rfrp_group* g = nullptr;
  CHECK(rfrp_group_from_fixture("no-such-group", &g) == RFRP_ERR_INPUT);
  CHECK(std::string(rfrp_last_error()).find("no-such-group") != std::string::npos);
  CHECK(g == nullptr);
  CHECK(rfrp_group_from_json("{\"generators\": [\"x\"", &g) == RFRP_ERR_INPUT);
  CHECK(rfrp_group_from_json(nullptr, &g) == RFRP_ERR_INPUT);

  REQUIRE(rfrp_group_from_json(R"({"generators":["x","y"],"relators":["xxxYY"]})", &g) == RFRP_OK);
  char* s = nullptr;
  REQUIRE(rfrp_group_abelianization(g, &s) == RFRP_OK);
  json h1 = take(s);
  CHECK(h1.at("b1") == 1);
  CHECK(h1.at("divisors").empty());
  rfrp_group_free(g);

  g = fixture("generic3");  // pi1 of an arrangement boundary manifold
  REQUIRE(rfrp_group_abelianization(g, &s) == RFRP_OK);
  CHECK(take(s).at("b1") == 4);
  rfrp_group_free(g);
  rfrp_group_free(nullptr);
}

TEST_CASE("filtration handle") {
  auto* g = fixture("f2");
  rfrp_filtration* f = nullptr;
  CHECK(rfrp_filtration_new(g, 4, 2, nullptr, &f) == RFRP_ERR_INPUT);
  rfrp_bounds tight{10, 0};
  CHECK(rfrp_filtration_new(g, 2, 3, &tight, &f) == RFRP_ERR_RESOURCE);
  REQUIRE(rfrp_filtration_new(g, 2, 3, nullptr, &f) == RFRP_OK);
  char* s = nullptr;
  REQUIRE(rfrp_filtration_report(f, &s) == RFRP_OK);
  json r = take(s);
  std::vector<int> idx;
  for (const auto& lv : r.at("levels")) idx.push_back(lv.at("index"));
  CHECK(idx == std::vector<int>{1, 4, 128});
  rfrp_filtration_free(f);
  rfrp_group_free(g);
}

TEST_CASE("separation certificates replay through the C API") {
  auto* g = fixture("heisenberg");
  char* s = nullptr;
  REQUIRE(rfrp_separate(g, "z", 2, 3, RFRP_METHOD_AUTO, nullptr, &s) == RFRP_OK);
  json r = take(s);
  CHECK(r.at("status") == "INCONCLUSIVE");
  CHECK(r.at("max_depth") == 3);

  REQUIRE(rfrp_separate(g, "x", 2, 3, RFRP_METHOD_AUTO, nullptr, &s) == RFRP_OK);
  std::string cert = s;
  rfrp_string_free(s);
  int valid = 0;
  REQUIRE(rfrp_replay(cert.c_str(), &valid, nullptr) == RFRP_OK);
  CHECK(valid == 1);

  json tampered = json::parse(cert);
  tampered["word_letters"] = json::array({3});
  std::string t = tampered.dump();
  REQUIRE(rfrp_replay(t.c_str(), &valid, &s) == RFRP_OK);
  CHECK(valid == 0);
  CHECK(take(s).at("valid") == false);

  CHECK(rfrp_separate(g, "q", 2, 3, RFRP_METHOD_AUTO, nullptr, &s) == RFRP_ERR_INPUT);
  CHECK(rfrp_separate(g, "x", 2, 3, RFRP_METHOD_TOWER, nullptr, &s) == RFRP_ERR_INPUT);
  rfrp_group_free(g);
}

TEST_CASE("battery, verdict and closure") {
  auto* g = fixture("heisenberg");
  char* s = nullptr;
  REQUIRE(rfrp_battery(g, R"({"circle_bundle":{"genus":1,"euler":1}})", &s) == RFRP_OK);
  std::string report = s;
  json r = take(s);
  REQUIRE(r.at("fired").size() == 1);
  CHECK(r.at("fired")[0].at("rule") == "NONZERO_EULER_CENTRAL_EXT");
  int valid = 0;
  REQUIRE(rfrp_battery_verify(g, report.c_str(), &valid) == RFRP_OK);
  CHECK(valid == 1);
  rfrp_group_free(g);

  REQUIRE(rfrp_verdict("Sol", &s) == RFRP_OK);
  CHECK(take(s).at("verdict") == "NOT_RFRP_ANY_PRIME_EVEN_VIRTUALLY");
  REQUIRE(rfrp_verdict("H3", &s) == RFRP_OK);
  CHECK(take(s).at("verdict") == "VIRTUALLY_RFRP_ALL_PRIMES");
  CHECK(rfrp_verdict("E8", &s) == RFRP_ERR_INPUT);

  REQUIRE(rfrp_edge_closure(2, 2, "y", 2, 3, &s) == RFRP_OK);
  CHECK(take(s).at("status") == "CERTIFIED");
  REQUIRE(rfrp_edge_closure(2, 2, "txx", 2, 3, &s) == RFRP_OK);
  CHECK(take(s).at("status") == "NOT_SEPARABLE_INPUT");
}

TEST_CASE("cover b1 and jump loci") {
  auto* g = fixture("f2");
  char* s = nullptr;
  REQUIRE(rfrp_cover_b1(g, "z3", 1, 2, &s) == RFRP_OK);
  json r = take(s);
  CHECK(r.at("predicted") == 4);
  CHECK(r.at("oracle") == 4);
  CHECK(rfrp_cover_b1(g, "q3", 0, 1, &s) == RFRP_ERR_INPUT);
  size_t dim = 0;
  REQUIRE(rfrp_dim_h1(g, R"({"order":3,"exponents":[1,0]})", &dim) == RFRP_OK);
  CHECK(dim == 1);
  rfrp_group_free(g);

  g = fixture("trefoil");
  int orders[] = {6};
  REQUIRE(rfrp_jump_scan(g, orders, 1, 0, 0, 2, &s) == RFRP_OK);
  r = take(s);
  REQUIRE(r.at("points").size() == 2);
  CHECK(r.at("points")[0].at("exponents") == json::array({1}));
  rfrp_group_free(g);
}

TEST_CASE("class X handles") {
  rfrp_classx* x = nullptr;
  CHECK(rfrp_classx_from_fixture("pencil1", &x) == RFRP_ERR_INPUT);
  REQUIRE(rfrp_classx_from_arrangement(R"({"lines":[["1","0","0"],["0","1","0"],["1","1","-1"]]})", &x) == RFRP_OK);
  char* s = nullptr;
  REQUIRE(rfrp_classx_report(x, "h1", &s) == RFRP_OK);
  CHECK(take(s).at("b1") == 4);
  REQUIRE(rfrp_classx_report(x, "dot", &s) == RFRP_OK);
  CHECK(std::string(s).rfind("graph", 0) == 0);
  rfrp_string_free(s);
  CHECK(rfrp_classx_report(x, "nonsense", &s) == RFRP_ERR_INPUT);
  REQUIRE(rfrp_classx_girth_cover(x, 2, &s) == RFRP_OK);
  CHECK(take(s).at("girth").get<int>() >= 6);
  rfrp_group* g = nullptr;
  REQUIRE(rfrp_classx_pi1(x, &g) == RFRP_OK);
  REQUIRE(rfrp_group_abelianization(g, &s) == RFRP_OK);
  CHECK(take(s).at("b1") == 4);
  rfrp_group_free(g);
  rfrp_classx_free(x);
}

TEST_CASE("last error is per thread") {
  rfrp_group* g = nullptr;
  CHECK(rfrp_group_from_fixture("bogus-one", &g) == RFRP_ERR_INPUT);
  std::string other;
  std::thread t([&] {
    rfrp_group* h = nullptr;
    rfrp_group_from_fixture("bogus-two", &h);
    other = rfrp_last_error();
  });
  t.join();
  CHECK(other.find("bogus-two") != std::string::npos);
  CHECK(std::string(rfrp_last_error()).find("bogus-one") != std::string::npos);
}
