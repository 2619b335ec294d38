#include "rfrp/covers/homology_tower.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "rfrp/errors.hpp"

namespace rfrp::covers {

std::size_t HomologyTower::VecHash::operator()(const std::vector<std::uint64_t>& v) const {
  std::size_t h = v.size();
  for (auto x : v) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

HomologyTower::HomologyTower(StallingsGraph base, int p, int levels)
    : base_(std::move(base)), p_(p), levels_(levels) {
  if (p_ < 2) throw InputError("homology tower: p must be prime");
  if (levels_ < 1) throw InputError("homology tower: need at least one level");
  if (!base_.connected()) throw InputError("homology tower: base graph is not connected");
  tree_ = spanning_tree(base_);
  const auto L = static_cast<std::size_t>(levels_);
  vertex_ids_.resize(L);
  vertex_count_.assign(L, 0);
  edge_ids_.resize(L);
  edge_count_.assign(L, 0);
  chains_.resize(L);
  chain_ids_.resize(L);
  for (std::size_t k = 0; k < L; ++k) {
    chains_[k].push_back({});  // id 0 is the zero chain
    chain_ids_[k][{}] = 0;
  }
}

std::uint32_t HomologyTower::intern_vertex(int level, std::uint32_t below, std::uint32_t chain) {
  auto& m = vertex_ids_[static_cast<std::size_t>(level)];
  std::uint64_t key = (static_cast<std::uint64_t>(below) << 32) | chain;
  auto [it, fresh] = m.emplace(key, vertex_count_[static_cast<std::size_t>(level)]);
  if (fresh) ++vertex_count_[static_cast<std::size_t>(level)];
  return it->second;
}

std::uint32_t HomologyTower::intern_edge(int level, std::uint32_t vertex, std::size_t edge) {
  auto& m = edge_ids_[static_cast<std::size_t>(level)];
  std::uint64_t key = static_cast<std::uint64_t>(vertex) * base_.edges.size() + edge;
  auto [it, fresh] = m.emplace(key, edge_count_[static_cast<std::size_t>(level)]);
  if (fresh) ++edge_count_[static_cast<std::size_t>(level)];
  return it->second;
}

std::uint32_t HomologyTower::add_to_chain(int level, std::uint32_t chain, std::uint32_t edge, bool plus) {
  const auto lv = static_cast<std::size_t>(level);
  Chain c = chains_[lv][chain];
  auto it = std::lower_bound(c.begin(), c.end(), std::make_pair(edge, 0u));
  const std::uint32_t delta = plus ? 1u : static_cast<std::uint32_t>(p_ - 1);
  if (it != c.end() && it->first == edge) {
    it->second = (it->second + delta) % static_cast<std::uint32_t>(p_);
    if (it->second == 0) c.erase(it);
  } else {
    c.insert(it, {edge, delta});
  }
  std::vector<std::uint64_t> key;
  key.reserve(c.size());
  for (auto [e, k] : c) key.push_back((static_cast<std::uint64_t>(e) << 8) | k);
  auto [pos, fresh] = chain_ids_[lv].emplace(std::move(key), static_cast<std::uint32_t>(chains_[lv].size()));
  if (fresh) chains_[lv].push_back(std::move(c));
  return pos->second;
}

void HomologyTower::tree_path(std::uint32_t v, std::vector<std::pair<std::size_t, bool>>& out) const {
  std::vector<std::pair<std::size_t, bool>> rev;
  while (v != base_.basepoint) {
    auto e = static_cast<std::size_t>(tree_.parent_edge[v]);
    bool fwd = tree_.forward[v];
    rev.push_back({e, fwd});
    v = fwd ? base_.edges[e].from : base_.edges[e].to;
  }
  out.assign(rev.rbegin(), rev.rend());
}

HomologyTower::State HomologyTower::start(std::uint32_t base_vertex) {
  State s;
  const auto L = static_cast<std::size_t>(levels_);
  s.vertex.assign(L, 0);
  s.chain.assign(L, 0);
  s.vertex[0] = base_.basepoint;
  for (std::size_t k = 1; k < L; ++k) s.vertex[k] = intern_vertex(static_cast<int>(k), s.vertex[k - 1], 0);
  std::vector<std::pair<std::size_t, bool>> path;
  tree_path(base_vertex, path);
  for (auto [e, fwd] : path) step(s, e, fwd);
  return s;
}

void HomologyTower::step(State& s, std::size_t edge, bool forward) {
  const auto& e = base_.edges[edge];
  const auto L = static_cast<std::size_t>(levels_);
  if (s.vertex[0] != (forward ? e.from : e.to)) throw Error("homology tower: edge does not start at current vertex");
  if (forward) {
    // The lifted edge starts at the old vertex on every level.
    std::vector<std::uint32_t> old = s.vertex;
    s.vertex[0] = e.to;
    for (std::size_t k = 0; k < L; ++k) {
      std::uint32_t id = intern_edge(static_cast<int>(k), old[k], edge);
      s.chain[k] = add_to_chain(static_cast<int>(k), s.chain[k], id, true);
      if (k + 1 < L) s.vertex[k + 1] = intern_vertex(static_cast<int>(k + 1), s.vertex[k], s.chain[k]);
    }
  } else {
    // Backwards: the lifted edge starts at the new vertex, known bottom-up.
    s.vertex[0] = e.from;
    for (std::size_t k = 0; k < L; ++k) {
      std::uint32_t id = intern_edge(static_cast<int>(k), s.vertex[k], edge);
      s.chain[k] = add_to_chain(static_cast<int>(k), s.chain[k], id, false);
      if (k + 1 < L) s.vertex[k + 1] = intern_vertex(static_cast<int>(k + 1), s.vertex[k], s.chain[k]);
    }
  }
}

void HomologyTower::step_letter(State& s, grp::Letter l) {
  std::size_t e = static_cast<std::size_t>(std::abs(l) - 1);
  if (e >= base_.edges.size()) throw InputError("homology tower: letter out of range");
  step(s, e, l > 0);
}

HomologyTower::State HomologyTower::trace(const grp::Word& w) {
  State s = start(base_.basepoint);
  for (grp::Letter l : w.letters()) step_letter(s, l);
  return s;
}

bool HomologyTower::same_vertex(const State& a, const State& b, int k) const {
  if (k <= levels_) return a.vertex[static_cast<std::size_t>(k - 1)] == b.vertex[static_cast<std::size_t>(k - 1)];
  const auto top = static_cast<std::size_t>(levels_ - 1);
  return a.vertex[top] == b.vertex[top] && a.chain[top] == b.chain[top];
}

std::optional<int> HomologyTower::separation_depth(const grp::Word& w) {
  State s0 = start(base_.basepoint);
  State s = s0;
  for (grp::Letter l : w.letters()) step_letter(s, l);
  for (int k = 1; k <= levels_; ++k) {
    if (!same_vertex(s0, s, k)) throw Error("homology tower: word is not closed at level " + std::to_string(k));
    if (!same_vertex(s0, s, k + 1)) return k;
  }
  return std::nullopt;
}

std::size_t HomologyTower::vertex_count(int k) const { return vertex_count_[static_cast<std::size_t>(k)]; }

std::optional<std::size_t> HomologyTower::girth(int k, std::size_t max_length) {
  if (k < 1 || k > levels_ + 1) throw InputError("homology tower: level out of range");
  std::vector<std::vector<std::pair<std::size_t, bool>>> out(base_.vertices);
  for (std::size_t i = 0; i < base_.edges.size(); ++i) {
    out[base_.edges[i].from].push_back({i, true});
    out[base_.edges[i].to].push_back({i, false});
  }
  std::size_t best = max_length + 1;
  for (std::uint32_t x = 0; x < base_.vertices; ++x) {
    const State s0 = start(x);
    std::vector<std::pair<std::size_t, bool>> walk;
    std::function<void(const State&)> dfs = [&](const State& s) {
      const std::size_t len = walk.size();
      if (len > 0 && s.vertex[0] == x && same_vertex(s0, s, k)) {
        bool cyclic_ok = !(walk.back().first == walk.front().first && walk.back().second != walk.front().second);
        if (cyclic_ok) {
          best = std::min(best, len);
          return;
        }
      }
      if (len + 1 >= best) return;
      std::uint32_t v = s.vertex[0];
      for (auto [e, fwd] : out[v]) {
        if (len > 0 && walk.back().first == e && walk.back().second != fwd) continue;  // backtrack
        State t = s;
        step(t, e, fwd);
        walk.push_back({e, fwd});
        dfs(t);
        walk.pop_back();
      }
    };
    dfs(s0);
  }
  if (best > max_length) return std::nullopt;
  return best;
}

}  // namespace rfrp::covers
