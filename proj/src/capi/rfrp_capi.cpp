#include "rfrp/rfrp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "rfrp/arr/arrangement.hpp"
#include "rfrp/arr/group_fixtures.hpp"
#include "rfrp/errors.hpp"
#include "rfrp/filtration/battery.hpp"
#include "rfrp/filtration/closure.hpp"
#include "rfrp/filtration/separation.hpp"
#include "rfrp/jump/jump_loci.hpp"
#include "rfrp/linalg/abelian.hpp"
#include "rfrp/mfd/class_x.hpp"

using nlohmann::json;
using namespace rfrp;

struct rfrp_group {
  grp::Presentation g;
};

struct rfrp_filtration {
  filtration::Filtration f;
};

struct rfrp_classx {
  mfd::ClassXGraph x;
};

namespace {

thread_local std::string last_error;

rfrp_status fail(rfrp_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
rfrp_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const InputError& e) {
    return fail(RFRP_ERR_INPUT, e.what());
  } catch (const json::exception& e) {
    return fail(RFRP_ERR_INPUT, std::string("json: ") + e.what());
  } catch (const ResourceLimit& e) {
    return fail(RFRP_ERR_RESOURCE, e.what());
  } catch (const OracleMismatch& e) {
    return fail(RFRP_ERR_MISMATCH, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RFRP_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(RFRP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RFRP_ERR_INTERNAL, "unknown exception");
  }
}

void need(const void* p, const char* what) {
  if (!p) throw InputError(std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rfrp_status emit(const json& j, char** out) {
  need(out, "out");
  *out = dup(j.dump());
  return RFRP_OK;
}

json parse(const char* text, const char* what) {
  need(text, what);
  return json::parse(text);
}

covers::Bounds to_bounds(const rfrp_bounds* b) {
  covers::Bounds out;
  if (b && b->index) out.index = b->index;
  if (b && b->generators) out.generators = b->generators;
  return out;
}

void check_prime(int p) {
  if (p < 2 || !linalg::is_prime(static_cast<std::uint64_t>(p))) throw InputError("p must be prime, got " + std::to_string(p));
}

json filtration_json(const filtration::Filtration& f) {
  json levels = json::array();
  for (int i = 1; i <= f.depth(); ++i) {
    const auto& lv = f.level(i);
    const auto& c = f.checks(i);
    json div = json::array();
    for (const auto& d : lv.h1.divisors) div.push_back(d.get_str());
    levels.push_back({{"depth", i},
                      {"index", lv.index()},
                      {"generators", lv.presentation.n_generators()},
                      {"relators", lv.presentation.relators().size()},
                      {"h1", linalg::describe(lv.h1)},
                      {"b1", lv.h1.rank},
                      {"h1_divisors", div},
                      {"layer_rank", lv.layer_rank()},
                      {"next_index", f.quotient_order(i + 1).get_str()},
                      {"checks",
                       {{"layer_elementary", c.layer_elementary}, {"nested", c.nested}, {"normal", c.normal}}}});
  }
  return {{"p", f.p()}, {"depth", f.depth()}, {"group", grp::presentation_to_json(f.group())}, {"levels", levels}};
}

}  // namespace

extern "C" {

const char* rfrp_version(void) { return "0.1.0"; }

const char* rfrp_last_error(void) { return last_error.c_str(); }

void rfrp_string_free(char* s) { std::free(s); }

rfrp_status rfrp_group_from_fixture(const char* name, rfrp_group** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    if (const auto* fx = arr::find_group_fixture(name)) {
      *out = new rfrp_group{fx->presentation};
      return RFRP_OK;
    }
    if (auto a = arr::find_arrangement_fixture(name)) {
      *out = new rfrp_group{mfd::pi1_presentation(arr::boundary_manifold(*a))};
      return RFRP_OK;
    }
    std::string n = name;
    if (n.rfind("smooth-curve", 0) == 0 && n.size() > 12 && n.find_first_not_of("0123456789", 12) == std::string::npos) {
      *out = new rfrp_group{arr::smooth_curve(std::stoi(n.substr(12))).presentation};
      return RFRP_OK;
    }
    return fail(RFRP_ERR_INPUT, "unknown fixture '" + n + "'");
  });
}

rfrp_status rfrp_group_from_json(const char* text, rfrp_group** out) {
  return guard([&] {
    need(out, "out");
    *out = new rfrp_group{grp::presentation_from_json(parse(text, "json"))};
    return RFRP_OK;
  });
}

void rfrp_group_free(rfrp_group* g) { delete g; }

rfrp_status rfrp_group_to_json(const rfrp_group* g, char** out) {
  return guard([&] {
    need(g, "group");
    return emit(grp::presentation_to_json(g->g), out);
  });
}

rfrp_status rfrp_group_abelianization(const rfrp_group* g, char** out) {
  return guard([&] {
    need(g, "group");
    auto a = linalg::abelianization(g->g);
    json div = json::array();
    for (const auto& d : a.divisors) div.push_back(d.get_str());
    return emit({{"h1", linalg::describe(a)}, {"b1", a.rank}, {"divisors", div}}, out);
  });
}

rfrp_status rfrp_filtration_new(const rfrp_group* g, int p, int depth, const rfrp_bounds* bounds,
                                rfrp_filtration** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    check_prime(p);
    if (depth < 1) throw InputError("depth must be at least 1");
    auto* f = new rfrp_filtration{filtration::Filtration(g->g, p, to_bounds(bounds))};
    try {
      f->f.extend_to(depth);
    } catch (...) {
      delete f;
      throw;
    }
    *out = f;
    return RFRP_OK;
  });
}

void rfrp_filtration_free(rfrp_filtration* f) { delete f; }

rfrp_status rfrp_filtration_report(const rfrp_filtration* f, char** out) {
  return guard([&] {
    need(f, "filtration");
    return emit(filtration_json(f->f), out);
  });
}

rfrp_status rfrp_separate(const rfrp_group* g, const char* word, int p, int max_depth, rfrp_method method,
                          const rfrp_bounds* bounds, char** out) {
  return guard([&] {
    need(g, "group");
    need(word, "word");
    check_prime(p);
    if (max_depth < 1) throw InputError("max depth must be at least 1");
    filtration::Method m = filtration::Method::Automatic;
    if (method == RFRP_METHOD_COSET_TABLE) m = filtration::Method::ReidemeisterSchreier;
    else if (method == RFRP_METHOD_TOWER) m = filtration::Method::HomologyTower;
    else if (method != RFRP_METHOD_AUTO) throw InputError("unknown method");
    auto w = g->g.parse(word);
    auto r = filtration::separate(g->g, w, p, max_depth, to_bounds(bounds), m);
    return emit(filtration::to_json(r, g->g), out);
  });
}

rfrp_status rfrp_replay(const char* certificate_json, int* valid, char** out) {
  return guard([&] {
    need(valid, "valid");
    auto outcome = filtration::replay(parse(certificate_json, "certificate"));
    *valid = outcome.ok ? 1 : 0;
    if (out) return emit({{"valid", outcome.ok}, {"detail", outcome.detail}}, out);
    return RFRP_OK;
  });
}

rfrp_status rfrp_battery(const rfrp_group* g, const char* hints_json, char** out) {
  return guard([&] {
    need(g, "group");
    filtration::BatteryHints hints;
    if (hints_json) hints = filtration::hints_from_json(json::parse(hints_json), g->g);
    auto r = filtration::obstruction_battery(g->g, hints);
    json j = filtration::to_json(r);
    j["hints"] = filtration::hints_to_json(hints, g->g);
    return emit(j, out);
  });
}

rfrp_status rfrp_battery_verify(const rfrp_group* g, const char* report_json, int* valid) {
  return guard([&] {
    need(g, "group");
    need(valid, "valid");
    std::string why;
    *valid = filtration::verify_report(g->g, parse(report_json, "report"), &why) ? 1 : 0;
    if (!*valid) last_error = why;
    return RFRP_OK;
  });
}

rfrp_status rfrp_verdict(const char* label, char** out) {
  return guard([&] {
    need(label, "label");
    auto v = filtration::geometry_verdict(label);
    return emit({{"geometry", label}, {"verdict", filtration::verdict_name(v)}}, out);
  });
}

rfrp_status rfrp_induced_topology(const rfrp_group* g, const char* sub_json, int p, int depth, char** out) {
  return guard([&] {
    need(g, "group");
    check_prime(p);
    json j = parse(sub_json, "subgroup");
    filtration::SubgroupEmbedding sub;
    sub.h = grp::presentation_from_json(j.at("group"));
    for (const auto& s : j.at("images")) sub.images.push_back(g->g.parse(s.get<std::string>()));
    auto r = filtration::induced_topology_report(g->g, sub, p, depth);
    return emit(filtration::to_json(r), out);
  });
}

rfrp_status rfrp_edge_closure(int free_rank, int x_index, const char* word, int p, int max_depth, char** out) {
  return guard([&] {
    need(word, "word");
    check_prime(p);
    auto ambient = arr::z_times_free(free_rank);
    auto r = filtration::edge_closure_check(x_index, ambient.parse(word), p, max_depth, free_rank);
    return emit(filtration::to_json(r), out);
  });
}

rfrp_status rfrp_dim_h1(const rfrp_group* g, const char* character_json, size_t* dim) {
  return guard([&] {
    need(g, "group");
    need(dim, "dim");
    *dim = jump::dim_h1_at(g->g, jump::character_from_json(parse(character_json, "character")));
    return RFRP_OK;
  });
}

rfrp_status rfrp_jump_scan(const rfrp_group* g, const int* orders, size_t n_orders, size_t budget,
                           unsigned long long seed, int jobs, char** out) {
  return guard([&] {
    need(g, "group");
    if (n_orders) need(orders, "orders");
    std::set<int> os;
    for (size_t i = 0; i < n_orders; ++i) {
      if (orders[i] < 2) throw InputError("character orders must be at least 2");
      os.insert(orders[i]);
    }
    auto reports = jump::torsion_point_scan(g->g, os, budget ? budget : 100000, jobs < 1 ? 1 : jobs,
                                            seed ? seed : jump::default_scan_seed);
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(jump::to_json(r));
    auto h1 = linalg::abelianization(g->g);
    return emit({{"b1", h1.rank}, {"orders", std::vector<int>(os.begin(), os.end())}, {"points", arr}}, out);
  });
}

rfrp_status rfrp_cover_b1(const rfrp_group* g, const char* quotient, int check, int jobs, char** out) {
  return guard([&] {
    need(g, "group");
    need(quotient, "quotient");
    need(out, "out");
    std::string q = quotient;
    grp::AbelianHom h = (!q.empty() && q.front() == '{') ? jump::hom_from_json(json::parse(q), g->g)
                                                         : jump::named_quotient(q, g->g);
    if (!h.finite_target()) throw InputError("cover b1 needs a finite quotient");
    json j = {{"quotient", q}, {"target_order", h.target_order().get_str()}};
    std::size_t predicted = jump::predicted_cover_b1(g->g, h, jobs < 1 ? 1 : jobs);
    j["predicted"] = predicted;
    rfrp_status s = RFRP_OK;
    if (check) {
      std::size_t oracle = jump::oracle_cover_b1(g->g, h);
      j["oracle"] = oracle;
      j["agree"] = oracle == predicted;
      if (oracle != predicted) {
        s = fail(RFRP_ERR_MISMATCH, "predicted b1 " + std::to_string(predicted) + " but the cover has b1 " +
                                        std::to_string(oracle));
      }
    }
    *out = dup(j.dump());
    return s;
  });
}

rfrp_status rfrp_classx_from_json(const char* text, rfrp_classx** out) {
  return guard([&] {
    need(out, "out");
    *out = new rfrp_classx{mfd::graph_from_json(parse(text, "json"))};
    return RFRP_OK;
  });
}

rfrp_status rfrp_classx_from_arrangement(const char* arrangement_json, rfrp_classx** out) {
  return guard([&] {
    need(out, "out");
    *out = new rfrp_classx{arr::boundary_manifold(arr::arrangement_from_json(parse(arrangement_json, "json")))};
    return RFRP_OK;
  });
}

rfrp_status rfrp_classx_from_fixture(const char* name, rfrp_classx** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    auto a = arr::find_arrangement_fixture(name);
    if (!a) return fail(RFRP_ERR_INPUT, std::string("unknown arrangement fixture '") + name + "'");
    *out = new rfrp_classx{arr::boundary_manifold(*a)};
    return RFRP_OK;
  });
}

void rfrp_classx_free(rfrp_classx* x) { delete x; }

rfrp_status rfrp_classx_report(const rfrp_classx* x, const char* what, char** out) {
  return guard([&] {
    need(x, "graph");
    need(what, "what");
    std::string w = what;
    const auto& g = x->x;
    if (w == "graph") return emit(mfd::graph_to_json(g), out);
    if (w == "validate") return emit(mfd::to_json(mfd::validate_class_x(g)), out);
    if (w == "dot") {
      *out = dup(mfd::to_dot(g));
      return RFRP_OK;
    }
    if (w == "pi1") return emit(grp::presentation_to_json(mfd::pi1_presentation(g)), out);
    if (w == "girth") return emit({{"girth", mfd::graph_girth(g)}}, out);
    auto mv = mfd::mv_h1(g);
    if (w == "h1") {
      auto tl = mfd::tl_generation_check(g);
      json div = json::array();
      for (const auto& d : mv.h1.divisors) div.push_back(d.get_str());
      return emit({{"h1", linalg::describe(mv.h1)},
                   {"b1", mv.h1.rank},
                   {"divisors", div},
                   {"mv_generators", mv.presentation.names.size()},
                   {"mv_relations", mv.presentation.relations.rows()},
                   {"t_l", {{"t_rank", tl.t_rank}, {"group_rank", tl.group_rank}, {"l_count", tl.l_count},
                            {"free_of_full_rank", tl.free_of_full_rank()}}}},
                  out);
    }
    if (w == "inclusions") {
      json arr = json::array();
      for (std::size_t v = 0; v < g.vertices.size(); ++v) arr.push_back(mfd::to_json(mfd::vertex_inclusion(g, mv, v)));
      return emit({{"girth", mfd::graph_girth(g)}, {"vertices", arr}}, out);
    }
    return fail(RFRP_ERR_INPUT, "unknown report '" + w + "'");
  });
}

rfrp_status rfrp_classx_girth_cover(const rfrp_classx* x, int p, char** out) {
  return guard([&] {
    need(x, "graph");
    check_prime(p);
    auto c = mfd::girth_fixing_cover(mfd::underlying_graph(x->x), p);
    return emit(mfd::to_json(c), out);
  });
}

rfrp_status rfrp_classx_pi1(const rfrp_classx* x, rfrp_group** out) {
  return guard([&] {
    need(x, "graph");
    need(out, "out");
    *out = new rfrp_group{mfd::pi1_presentation(x->x)};
    return RFRP_OK;
  });
}

rfrp_status rfrp_arrangement_incidence(const char* arrangement_json, char** out) {
  return guard([&] {
    auto a = arr::arrangement_from_json(parse(arrangement_json, "json"));
    return emit(arr::to_json(arr::incidence(a)), out);
  });
}

rfrp_status rfrp_smooth_curve(int degree, char** out) {
  return guard([&] {
    auto rec = arr::smooth_curve(degree);
    json j = {{"degree", rec.degree},
              {"genus", rec.hint.genus},
              {"euler", rec.hint.euler},
              {"presentation", grp::presentation_to_json(rec.presentation)},
              {"expected", rec.expected}};
    filtration::BatteryHints hints;
    hints.circle_bundle = rec.hint;
    j["battery"] = filtration::to_json(filtration::obstruction_battery(rec.presentation, hints));
    return emit(j, out);
  });
}

rfrp_status rfrp_fixtures(char** out) {
  return guard([&] {
    json arr = json::array();
    for (const auto& e : arr::gallery())
      arr.push_back({{"name", e.name}, {"kind", e.kind}, {"description", e.description}, {"expected", e.expected}});
    return emit(arr, out);
  });
}

}  // extern "C"
