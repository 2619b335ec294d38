#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rfrp/covers/stallings.hpp"
#include "rfrp/grp/word.hpp"

namespace rfrp::covers {

// Iterated mod-p homology covers L_1 = base, L_{k+1} -> L_k, built lazily:
// only the vertices and edges touched by traced paths are ever created.
// A vertex of L_{k+1} is a vertex of L_k together with the F_p chain on L_k
// of the path that reached it.
class HomologyTower {
 public:
  HomologyTower(StallingsGraph base, int p, int levels);

  struct State {
    std::vector<std::uint32_t> vertex;  // vertex[k] lives in L_{k+1}
    std::vector<std::uint32_t> chain;   // chain[k] is a 1-chain on L_{k+1}
  };
  using Chain = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (edge id, coefficient)

  int p() const { return p_; }
  int levels() const { return levels_; }
  const StallingsGraph& base() const { return base_; }

  State start(std::uint32_t base_vertex);
  void step(State& s, std::size_t edge, bool forward);
  void step_letter(State& s, grp::Letter l);  // wedge bases: letter k is edge k-1
  State trace(const grp::Word& w);

  // True when a path from `a` to `b` lifts to a closed path in L_k (1 <= k <= levels+1).
  bool same_vertex(const State& a, const State& b, int k) const;

  // For a word in a wedge base: d with w in K_d but not K_{d+1}; nullopt when w lies in K_{levels+1}.
  std::optional<int> separation_depth(const grp::Word& w);

  const Chain& chain(int level, std::uint32_t id) const { return chains_[static_cast<std::size_t>(level)][id]; }

  // Shortest cyclically reduced closed walk lifting to a closed path in L_k,
  // searched up to max_length; nullopt when none is that short.
  std::optional<std::size_t> girth(int k, std::size_t max_length);

  std::size_t vertex_count(int k) const;  // vertices of L_{k+1} created so far (k >= 1)

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const;
  };

  std::uint32_t intern_vertex(int level, std::uint32_t below, std::uint32_t chain);
  std::uint32_t intern_edge(int level, std::uint32_t vertex, std::size_t edge);
  std::uint32_t add_to_chain(int level, std::uint32_t chain, std::uint32_t edge, bool plus);
  void tree_path(std::uint32_t v, std::vector<std::pair<std::size_t, bool>>& out) const;

  StallingsGraph base_;
  int p_;
  int levels_;
  SpanningTree tree_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> vertex_ids_;  // index = level of the vertex - 1
  std::vector<std::uint32_t> vertex_count_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> edge_ids_;
  std::vector<std::uint32_t> edge_count_;
  std::vector<std::vector<Chain>> chains_;
  std::vector<std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, VecHash>> chain_ids_;
};

}  // namespace rfrp::covers
