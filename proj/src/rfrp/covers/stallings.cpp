#include "rfrp/covers/stallings.hpp"

#include <deque>
#include <limits>
#include <map>
#include <sstream>

#include "rfrp/errors.hpp"

namespace rfrp::covers {

StallingsGraph StallingsGraph::wedge(int circles) {
  StallingsGraph s;
  s.vertices = 1;
  for (int i = 1; i <= circles; ++i) s.edges.push_back({0, 0, i});
  return s;
}

StallingsGraph StallingsGraph::cycle(std::size_t length) {
  StallingsGraph s;
  s.vertices = length;
  for (std::size_t i = 0; i < length; ++i)
    s.edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + 1) % length), 1});
  return s;
}

StallingsGraph StallingsGraph::from_coset_table(const CosetTable& t) {
  StallingsGraph s;
  s.vertices = t.index;
  for (std::size_t g = 0; g < t.action.size(); ++g)
    for (std::uint32_t c = 0; c < t.index; ++c) s.edges.push_back({c, t.action[g][c], static_cast<int>(g + 1)});
  return s;
}

bool StallingsGraph::folded() const {
  std::map<std::pair<std::uint32_t, int>, int> out, in;
  for (const auto& e : edges) {
    if (++out[{e.from, e.label}] > 1) return false;
    if (++in[{e.to, e.label}] > 1) return false;
  }
  return true;
}

bool StallingsGraph::connected() const {
  if (vertices == 0 || basepoint >= vertices) return false;
  const auto t = spanning_tree(*this);
  for (std::size_t v = 0; v < vertices; ++v)
    if (v != basepoint && t.parent_edge[v] < 0) return false;
  return true;
}

SpanningTree spanning_tree(const StallingsGraph& s) {
  std::vector<std::vector<std::pair<std::size_t, bool>>> adj(s.vertices);
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    adj[s.edges[i].from].push_back({i, true});
    adj[s.edges[i].to].push_back({i, false});
  }
  SpanningTree t;
  t.parent_edge.assign(s.vertices, -1);
  t.forward.assign(s.vertices, true);
  t.in_tree.assign(s.edges.size(), false);
  std::vector<bool> seen(s.vertices, false);
  std::deque<std::uint32_t> q{s.basepoint};
  seen[s.basepoint] = true;
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    for (auto [i, fwd] : adj[v]) {
      std::uint32_t w = fwd ? s.edges[i].to : s.edges[i].from;
      if (seen[w]) continue;
      seen[w] = true;
      t.parent_edge[w] = static_cast<std::int64_t>(i);
      t.forward[w] = fwd;
      t.in_tree[i] = true;
      q.push_back(w);
    }
  }
  return t;
}

StallingsGraph p_homology_cover(const StallingsGraph& s, int p, std::uint64_t vertex_bound) {
  if (p < 2) throw InputError("p_homology_cover: p must be prime");
  if (!s.connected()) throw InputError("p_homology_cover: graph is not connected");
  const SpanningTree tree = spanning_tree(s);
  std::vector<std::int64_t> coord(s.edges.size(), -1);
  std::size_t b = 0;
  for (std::size_t i = 0; i < s.edges.size(); ++i)
    if (!tree.in_tree[i]) coord[i] = static_cast<std::int64_t>(b++);
  // deck group (Z/p)^b, element index in base p
  std::uint64_t deck = 1;
  for (std::size_t k = 0; k < b; ++k) {
    if (deck > vertex_bound / static_cast<std::uint64_t>(p) / s.vertices)
      throw ResourceLimit("p_homology_cover: cover size exceeds bound " + std::to_string(vertex_bound));
    deck *= static_cast<std::uint64_t>(p);
  }
  std::vector<std::uint64_t> place(b);
  for (std::size_t k = 0, w = 1; k < b; ++k, w *= static_cast<std::size_t>(p)) place[k] = w;

  StallingsGraph out;
  out.vertices = s.vertices * deck;
  out.basepoint = s.basepoint;  // sheet 0
  out.edges.reserve(s.edges.size() * deck);
  for (std::uint64_t a = 0; a < deck; ++a)
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
      const auto& e = s.edges[i];
      std::uint64_t a2 = a;
      if (coord[i] >= 0) {
        std::uint64_t pl = place[static_cast<std::size_t>(coord[i])];
        std::uint64_t digit = (a / pl) % static_cast<std::uint64_t>(p);
        a2 = a - digit * pl + ((digit + 1) % static_cast<std::uint64_t>(p)) * pl;
      }
      out.edges.push_back({static_cast<std::uint32_t>(a * s.vertices + e.from),
                           static_cast<std::uint32_t>(a2 * s.vertices + e.to), e.label});
    }
  return out;
}

std::optional<std::size_t> girth(const StallingsGraph& s) {
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> adj(s.vertices);
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    adj[s.edges[i].from].push_back({i, s.edges[i].to});
    if (s.edges[i].from != s.edges[i].to) adj[s.edges[i].to].push_back({i, s.edges[i].from});
  }
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::size_t best = inf;
  std::vector<std::size_t> dist(s.vertices);
  std::vector<std::int64_t> via(s.vertices);
  for (std::uint32_t root = 0; root < s.vertices; ++root) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[root] = 0;
    via[root] = -1;
    std::deque<std::uint32_t> q{root};
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      if (2 * dist[v] >= best) break;
      for (auto [i, w] : adj[v]) {
        if (static_cast<std::int64_t>(i) == via[v]) continue;
        if (w == v) {
          best = std::min(best, 2 * dist[v] + 1);
          continue;
        }
        if (dist[w] == inf) {
          dist[w] = dist[v] + 1;
          via[w] = static_cast<std::int64_t>(i);
          q.push_back(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == inf) return std::nullopt;
  return best;
}

std::string to_dot(const StallingsGraph& s, const std::string& name) {
  std::ostringstream o;
  o << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < s.vertices; ++v) {
    o << "  v" << v;
    if (v == s.basepoint) o << " [shape=doublecircle]";
    o << ";\n";
  }
  for (const auto& e : s.edges) o << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
  o << "}\n";
  return o.str();
}

}  // namespace rfrp::covers
