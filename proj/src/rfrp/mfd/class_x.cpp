#include "rfrp/mfd/class_x.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "rfrp/errors.hpp"
#include "rfrp/linalg/smith.hpp"

namespace rfrp::mfd {

using linalg::BigInt;

std::size_t ClassXGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& e : edges) d += (e.a == v) + (e.b == v);
  return d;
}

std::size_t ClassXGraph::index_of(int id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return i;
  throw InputError("class X graph: unknown vertex id " + std::to_string(id));
}

namespace {

std::string color_name(Color c) { return c == Color::L ? "L" : "P"; }

std::string vname(const ClassXGraph& g, std::size_t v) {
  return color_name(g.vertices[v].color) + std::to_string(g.vertices[v].id);
}

std::string ename(const ClassXGraph& g, const XEdge& e) { return vname(g, e.a) + "-" + vname(g, e.b); }

std::size_t least_id_vertex(const ClassXGraph& g) {
  std::size_t r = 0;
  for (std::size_t i = 1; i < g.vertices.size(); ++i)
    if (g.vertices[i].id < g.vertices[r].id) r = i;
  return r;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const ClassXGraph& g) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertices.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    adj[g.edges[i].a].push_back({i, g.edges[i].b});
    if (g.edges[i].a != g.edges[i].b) adj[g.edges[i].b].push_back({i, g.edges[i].a});
  }
  return adj;
}

}  // namespace

ClassXGraph graph_from_json(const nlohmann::json& j) {
  ClassXGraph g;
  std::set<int> ids;
  for (const auto& v : j.at("vertices")) {
    XVertex x;
    x.id = v.at("id").get<int>();
    const std::string c = v.at("color").get<std::string>();
    if (c != "L" && c != "P") throw InputError("class X graph: color must be L or P");
    x.color = c == "L" ? Color::L : Color::P;
    x.genus = v.value("genus", 0);
    x.boundary = v.at("boundary").get<int>();
    x.euler = v.value("euler", 0L);
    if (!ids.insert(x.id).second) throw InputError("class X graph: duplicate vertex id " + std::to_string(x.id));
    g.vertices.push_back(x);
  }
  std::vector<int> next_slot(g.vertices.size(), 0);
  for (const auto& e : j.at("edges")) {
    auto arr = e.get<std::vector<int>>();
    if (arr.size() != 2 && arr.size() != 4) throw InputError("class X graph: edges are [a, b] or [a, b, slot_a, slot_b]");
    XEdge x;
    x.a = g.index_of(arr[0]);
    x.b = g.index_of(arr[1]);
    if (arr.size() == 4) {
      x.slot_a = arr[2];
      x.slot_b = arr[3];
    } else {
      x.slot_a = next_slot[x.a]++;
      x.slot_b = next_slot[x.b]++;
    }
    g.edges.push_back(x);
  }
  return g;
}

nlohmann::json graph_to_json(const ClassXGraph& g) {
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  for (const auto& v : g.vertices)
    vs.push_back({{"id", v.id}, {"color", color_name(v.color)}, {"genus", v.genus}, {"boundary", v.boundary}, {"euler", v.euler}});
  for (const auto& e : g.edges) es.push_back({g.vertices[e.a].id, g.vertices[e.b].id, e.slot_a, e.slot_b});
  return {{"vertices", vs}, {"edges", es}};
}

std::string to_dot(const ClassXGraph& g, const std::string& name) {
  std::ostringstream o;
  o << "graph " << name << " {\n";
  for (const auto& v : g.vertices)
    o << "  v" << v.id << " [label=\"" << color_name(v.color) << v.id << "\\ng=" << v.genus << " m=" << v.boundary
      << " e=" << v.euler << "\", shape=" << (v.color == Color::L ? "box" : "ellipse") << "];\n";
  for (const auto& e : g.edges)
    o << "  v" << g.vertices[e.a].id << " -- v" << g.vertices[e.b].id << " [label=\"" << e.slot_a << ":" << e.slot_b
      << "\"];\n";
  o << "}\n";
  return o.str();
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.ok; });
}

std::string ValidationReport::summary() const {
  std::string s;
  for (const auto& c : checks) {
    if (c.ok) continue;
    if (!s.empty()) s += "; ";
    s += c.id + " fails at";
    for (const auto& o : c.offenders) s += " " + o;
  }
  return s.empty() ? "all axioms hold" : s;
}

ValidationReport validate_class_x(const ClassXGraph& g) {
  ValidationReport r;
  AxiomCheck x1{"X1", true, {}}, x2{"X2", true, {}}, x3a{"X3'", true, {}}, x3b{"X3''", true, {}};
  AxiomCheck x4a{"X4'", true, {}}, x4b{"X4''", true, {}}, x5{"X5", true, {}};
  auto fail = [](AxiomCheck& c, std::string who) {
    c.ok = false;
    c.offenders.push_back(std::move(who));
  };
  const std::size_t n = g.vertices.size();
  if (n == 0) fail(x1, "empty graph");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : g.edges) {
    if (e.a >= n || e.b >= n) {
      fail(x1, "edge out of range");
      continue;
    }
    if (g.vertices[e.a].color == g.vertices[e.b].color) fail(x1, ename(g, e) + " (not bipartite)");
    if (!seen.insert({std::min(e.a, e.b), std::max(e.a, e.b)}).second) fail(x1, ename(g, e) + " (parallel edge)");
  }
  if (n > 0 && x1.offenders.empty()) {
    const auto adj = adjacency(g);
    std::vector<bool> reached(n, false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto [e, w] : adj[v])
        if (!reached[w]) reached[w] = true, stack.push_back(w);
    }
    for (std::size_t v = 0; v < n; ++v)
      if (!reached[v]) fail(x1, vname(g, v) + " (disconnected)");
  }
  std::vector<std::set<int>> slots(n);
  for (const auto& e : g.edges) {
    if (e.a >= n || e.b >= n) continue;
    for (auto [v, s] : {std::pair{e.a, e.slot_a}, std::pair{e.b, e.slot_b}}) {
      if (s < 0 || s >= g.vertices[v].boundary) fail(x5, vname(g, v) + " slot " + std::to_string(s) + " (out of range)");
      else if (!slots[v].insert(s).second) fail(x5, vname(g, v) + " slot " + std::to_string(s) + " (used twice)");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto& x = g.vertices[v];
    const auto deg = static_cast<int>(g.degree(v));
    if (x.genus < 0 || x.boundary < 1) fail(x2, vname(g, v));
    if (x.color == Color::P) {
      if (deg < 2) fail(x1, vname(g, v) + " (degree " + std::to_string(deg) + ")");
      if (x.boundary != deg) fail(x4a, vname(g, v));
      if (x.euler == 0) fail(x4b, vname(g, v));
    } else {
      if (x.boundary < deg + 1) fail(x3a, vname(g, v));
      if (x.euler != 0) fail(x3b, vname(g, v));
    }
  }
  r.checks = {x1, x2, x3a, x3b, x4a, x4b, x5};
  return r;
}

nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"axiom", c.id}, {"ok", c.ok}, {"offenders", c.offenders}});
  return {{"kind", "class-x-validation"}, {"ok", r.ok()}, {"checks", checks}};
}

namespace {

MVPresentation mv_presentation(const ClassXGraph& g) {
  MVPresentation mv;
  const std::size_t n = g.vertices.size();
  mv.t.resize(n);
  mv.b.resize(n);
  mv.w.resize(n);
  mv.xi.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& x = g.vertices[v];
    const std::string id = std::to_string(x.id);
    mv.t[v] = mv.names.size();
    mv.names.push_back("t" + id);
    for (int s = 0; s < x.boundary; ++s) {
      mv.b[v].push_back(mv.names.size());
      mv.names.push_back("b" + id + "." + std::to_string(s));
    }
    for (int k = 0; k < 2 * x.genus; ++k) {
      mv.w[v].push_back(mv.names.size());
      mv.names.push_back("w" + id + "." + std::to_string(k));
    }
  }
  const std::size_t loops = g.edges.size() + 1 - n;
  for (std::size_t k = 0; k < loops; ++k) {
    mv.loops.push_back(mv.names.size());
    mv.names.push_back("loop" + std::to_string(k));
  }
  std::vector<std::vector<BigInt>> rows;
  auto row = [&] { return std::vector<BigInt>(mv.names.size(), 0); };
  for (std::size_t v = 0; v < n; ++v) {
    auto r = row();
    for (auto c : mv.b[v]) r[c] = 1;
    r[mv.t[v]] -= g.vertices[v].euler;
    mv.euler_rows.push_back(rows.size());
    rows.push_back(r);
  }
  std::vector<std::set<int>> used(n);
  for (const auto& e : g.edges) {
    used[e.a].insert(e.slot_a);
    used[e.b].insert(e.slot_b);
    // Flip: each side's boundary curve is the other side's fiber.
    auto r1 = row();
    r1[mv.b[e.a][static_cast<std::size_t>(e.slot_a)]] += 1;
    r1[mv.t[e.b]] -= 1;
    rows.push_back(r1);
    auto r2 = row();
    r2[mv.b[e.b][static_cast<std::size_t>(e.slot_b)]] += 1;
    r2[mv.t[e.a]] -= 1;
    rows.push_back(r2);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.vertices[v].color != Color::L) continue;
    bool first = true;
    for (int s = 0; s < g.vertices[v].boundary; ++s) {
      if (used[v].count(s)) continue;
      if (!first) mv.xi[v].push_back(mv.b[v][static_cast<std::size_t>(s)]);
      first = false;
    }
  }
  std::vector<BigInt> flat;
  for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  mv.relations = linalg::IntMatrix(rows.size(), mv.names.size(), std::move(flat));
  return mv;
}

void require_valid(const ClassXGraph& g) {
  auto r = validate_class_x(g);
  if (!r.ok()) throw InputError("not a class X graph: " + r.summary());
}

}  // namespace

MVResult mv_h1(const ClassXGraph& g) {
  require_valid(g);
  MVResult r;
  r.presentation = mv_presentation(g);
  r.h1 = linalg::abelian_structure(r.presentation.relations);
  return r;
}

TLGenerationCheck tl_generation_check(const ClassXGraph& g) {
  require_valid(g);
  const auto mv = mv_presentation(g);
  std::vector<std::size_t> killed(mv.loops);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    killed.insert(killed.end(), mv.w[v].begin(), mv.w[v].end());
    killed.insert(killed.end(), mv.xi[v].begin(), mv.xi[v].end());
  }
  const std::size_t cols = mv.names.size();
  linalg::IntMatrix m(mv.relations.rows() + killed.size(), cols);
  for (std::size_t i = 0; i < mv.relations.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = mv.relations(i, j);
  for (std::size_t k = 0; k < killed.size(); ++k) m(mv.relations.rows() + k, killed[k]) = 1;
  const auto a = linalg::abelian_structure(m);
  TLGenerationCheck out;
  out.group_rank = a.rank;
  std::vector<std::vector<BigInt>> images;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.vertices[v].color != Color::L) continue;
    ++out.l_count;
    std::vector<BigInt> unit(cols, 0);
    unit[mv.t[v]] = 1;
    auto c = a.coordinates(unit);
    images.emplace_back(c.begin() + static_cast<long>(a.torsion_count()), c.end());
  }
  std::vector<BigInt> flat;
  for (auto& r : images) flat.insert(flat.end(), r.begin(), r.end());
  out.t_rank = images.empty() ? 0 : linalg::rank(linalg::IntMatrix(images.size(), a.rank, std::move(flat)));
  return out;
}

std::size_t graph_girth(const ClassXGraph& g) {
  auto r = covers::girth(underlying_graph(g));
  return r ? *r : 0;
}

InclusionReport vertex_inclusion(const ClassXGraph& g, const MVResult& mv, std::size_t v) {
  if (v >= g.vertices.size()) throw InputError("vertex inclusion: vertex out of range");
  const auto& p = mv.presentation;
  std::vector<std::size_t> basis{p.t[v]};
  basis.insert(basis.end(), p.b[v].begin(), p.b[v].end() - 1);
  basis.insert(basis.end(), p.w[v].begin(), p.w[v].end());
  InclusionReport r;
  r.vertex = v;
  r.source_rank = basis.size();
  const std::size_t t = mv.h1.torsion_count();
  r.matrix = linalg::IntMatrix(basis.size(), mv.h1.rank);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<BigInt> unit(p.names.size(), 0);
    unit[basis[i]] = 1;
    auto c = mv.h1.coordinates(unit);
    for (std::size_t k = 0; k < mv.h1.rank; ++k) r.matrix(i, k) = c[t + k];
  }
  r.diagonal = linalg::smith_diagonal(r.matrix);
  std::size_t nonzero = 0;
  bool units = true;
  for (const auto& d : r.diagonal)
    if (d != 0) {
      ++nonzero;
      units = units && abs(d) == 1;
    }
  r.injective = nonzero == r.source_rank;
  r.split = r.injective && units;
  const auto gi = graph_girth(g);
  r.below_girth_threshold = gi != 0 && gi < 6;
  return r;
}

nlohmann::json to_json(const InclusionReport& r) {
  std::vector<std::vector<std::string>> m;
  for (std::size_t i = 0; i < r.matrix.rows(); ++i) {
    m.emplace_back();
    for (std::size_t j = 0; j < r.matrix.cols(); ++j) m.back().push_back(r.matrix(i, j).get_str());
  }
  std::vector<std::string> d;
  for (const auto& x : r.diagonal) d.push_back(x.get_str());
  nlohmann::json j{{"vertex", r.vertex}, {"matrix", m}, {"source_rank", r.source_rank}, {"snf_diagonal", d},
                   {"injective", r.injective}, {"split", r.split}};
  if (r.below_girth_threshold) j["flag"] = "BELOW_GIRTH_THRESHOLD";
  return j;
}

grp::Presentation pi1_presentation(const ClassXGraph& g) {
  require_valid(g);
  const std::size_t n = g.vertices.size();
  std::vector<std::string> names;
  std::vector<int> t(n), first_a(n), first_c(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& x = g.vertices[v];
    const std::string id = std::to_string(x.id);
    t[v] = static_cast<int>(names.size()) + 1;
    names.push_back("t" + id);
    first_a[v] = static_cast<int>(names.size()) + 1;
    for (int k = 1; k <= x.genus; ++k) {
      names.push_back("a" + id + "_" + std::to_string(k));
      names.push_back("b" + id + "_" + std::to_string(k));
    }
    first_c[v] = static_cast<int>(names.size()) + 1;
    for (int k = 1; k < x.boundary; ++k) names.push_back("c" + id + "_" + std::to_string(k));
  }
  using grp::Word;
  // Boundary curve of slot s: a free generator, or for the last slot
  // t^e (prod [a_i,b_i] c_1 ... c_{m-1})^-1.
  auto boundary = [&](std::size_t v, int s) {
    const auto& x = g.vertices[v];
    if (s < x.boundary - 1) return Word::generator(first_c[v] + s);
    Word w;
    for (int k = 0; k < x.genus; ++k)
      w *= grp::commutator(Word::generator(first_a[v] + 2 * k), Word::generator(first_a[v] + 2 * k + 1));
    for (int k = 0; k + 1 < x.boundary; ++k) w *= Word::generator(first_c[v] + k);
    return Word::generator(t[v]).power(x.euler) * w.inverse();
  };
  std::vector<Word> rels;
  for (std::size_t v = 0; v < n; ++v) {
    const int k = 2 * g.vertices[v].genus + g.vertices[v].boundary - 1;
    for (int i = 0; i < k; ++i) rels.push_back(grp::commutator(Word::generator(t[v]), Word::generator(first_a[v] + i)));
  }
  // BFS spanning tree from the least id.
  const auto adj = adjacency(g);
  std::vector<bool> reached(n, false), tree(g.edges.size(), false);
  std::queue<std::size_t> q;
  const std::size_t root = least_id_vertex(g);
  q.push(root);
  reached[root] = true;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto [e, w] : adj[v])
      if (!reached[w]) {
        reached[w] = true;
        tree[e] = true;
        q.push(w);
      }
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    Word u;
    if (!tree[i]) {
      names.push_back("u" + std::to_string(i));
      u = Word::generator(static_cast<int>(names.size()));
    }
    rels.push_back(u * Word::generator(t[e.a]) * u.inverse() * boundary(e.b, e.slot_b).inverse());
    rels.push_back(u * boundary(e.a, e.slot_a) * u.inverse() * Word::generator(t[e.b]).inverse());
  }
  return grp::Presentation(static_cast<int>(names.size()), std::move(rels), names);
}

covers::StallingsGraph underlying_graph(const ClassXGraph& g) {
  covers::StallingsGraph s;
  s.vertices = g.vertices.size();
  s.basepoint = static_cast<std::uint32_t>(least_id_vertex(g));
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    s.edges.push_back({static_cast<std::uint32_t>(g.edges[i].a), static_cast<std::uint32_t>(g.edges[i].b), static_cast<int>(i + 1)});
  return s;
}

GraphCover girth_fixing_cover(const covers::StallingsGraph& base, int p, std::size_t min_girth, std::uint64_t vertex_bound) {
  if (!base.connected()) throw InputError("girth-fixing cover: graph is not connected");
  GraphCover c;
  c.cover = base;
  c.vertex_map.resize(base.vertices);
  for (std::uint32_t v = 0; v < base.vertices; ++v) c.vertex_map[v] = v;
  c.edge_map.resize(base.edges.size());
  for (std::size_t i = 0; i < base.edges.size(); ++i) c.edge_map[i] = i;
  while (true) {
    auto gi = covers::girth(c.cover);
    c.girth = gi ? *gi : 0;
    if (!gi || *gi >= min_girth) return c;
    auto next = covers::p_homology_cover(c.cover, p, vertex_bound);
    const std::size_t nv = c.cover.vertices, ne = c.cover.edges.size();
    std::vector<std::uint32_t> vm(next.vertices);
    for (std::size_t v = 0; v < next.vertices; ++v) vm[v] = c.vertex_map[v % nv];
    std::vector<std::size_t> em(next.edges.size());
    for (std::size_t i = 0; i < next.edges.size(); ++i) em[i] = c.edge_map[i % ne];
    c.cover = std::move(next);
    c.vertex_map = std::move(vm);
    c.edge_map = std::move(em);
    ++c.rounds;
  }
}

nlohmann::json to_json(const GraphCover& c) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : c.cover.edges) edges.push_back({e.from, e.to});
  return {{"kind", "girth-fixing-cover"}, {"vertices", c.cover.vertices}, {"edges", edges},
          {"vertex_map", c.vertex_map}, {"edge_map", c.edge_map}, {"girth", c.girth}, {"rounds", c.rounds},
          {"degree", c.cover.vertices / std::max<std::size_t>(1, *std::max_element(c.vertex_map.begin(), c.vertex_map.end()) + 1)}};
}

ClassXGraph random_class_x_graph(std::mt19937_64& rng, std::size_t max_vertices) {
  if (max_vertices < 3) throw InputError("random class X graph: need room for at least 3 vertices");
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int nl = uniform(2, std::min<int>(5, static_cast<int>(max_vertices) - 1));
    const int np = uniform(1, std::min<int>(6, static_cast<int>(max_vertices) - nl));
    std::set<std::pair<int, int>> pairs;  // L pairs already joined through a P
    std::vector<std::vector<int>> nbrs;
    bool ok = true;
    for (int p = 0; p < np && ok; ++p) {
      const int deg = uniform(2, std::min(nl, 3));
      std::vector<int> ls(static_cast<std::size_t>(nl));
      for (int i = 0; i < nl; ++i) ls[static_cast<std::size_t>(i)] = i;
      std::shuffle(ls.begin(), ls.end(), rng);
      ls.resize(static_cast<std::size_t>(deg));
      std::sort(ls.begin(), ls.end());
      for (std::size_t i = 0; i < ls.size() && ok; ++i)
        for (std::size_t j = i + 1; j < ls.size() && ok; ++j) ok = pairs.insert({ls[i], ls[j]}).second;
      nbrs.push_back(ls);
    }
    if (!ok) continue;
    ClassXGraph g;
    for (int i = 0; i < nl; ++i) g.vertices.push_back({i, Color::L, uniform(0, 2), 0, 0});
    for (int p = 0; p < np; ++p) g.vertices.push_back({nl + p, Color::P, uniform(0, 1), 0, 0});
    std::vector<int> next_slot(g.vertices.size(), 0);
    for (int p = 0; p < np; ++p)
      for (int l : nbrs[static_cast<std::size_t>(p)]) {
        const std::size_t pv = static_cast<std::size_t>(nl + p), lv = static_cast<std::size_t>(l);
        g.edges.push_back({lv, pv, next_slot[lv]++, next_slot[pv]++});
      }
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      auto& x = g.vertices[v];
      const int deg = next_slot[v];
      if (x.color == Color::L) {
        x.boundary = deg + uniform(1, 3);
      } else {
        x.boundary = deg;
        int e = uniform(1, 3);
        x.euler = uniform(0, 1) ? e : -e;
      }
    }
    if (validate_class_x(g).ok()) return g;
  }
  throw Error("random class X graph: no valid graph found");
}

}  // namespace rfrp::mfd
