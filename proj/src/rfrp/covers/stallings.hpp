#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rfrp/covers/coset_table.hpp"

namespace rfrp::covers {

struct GraphEdge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  int label = 1;
};

// Labeled directed graph; folded means at most one outgoing and one incoming
// edge per label at each vertex.
struct StallingsGraph {
  std::size_t vertices = 1;
  std::vector<GraphEdge> edges;
  std::uint32_t basepoint = 0;

  static StallingsGraph wedge(int circles);
  static StallingsGraph cycle(std::size_t length);
  static StallingsGraph from_coset_table(const CosetTable& t);

  bool folded() const;
  bool connected() const;
  long euler_characteristic() const { return static_cast<long>(vertices) - static_cast<long>(edges.size()); }
  std::size_t betti() const { return edges.size() - vertices + 1; }  // connected graphs only
};

StallingsGraph p_homology_cover(const StallingsGraph& s, int p, std::uint64_t vertex_bound = 1u << 20);

// Length of the shortest cycle; nullopt for a forest.
std::optional<std::size_t> girth(const StallingsGraph& s);

std::string to_dot(const StallingsGraph& s, const std::string& name = "stallings");

// BFS spanning tree from the basepoint: for each vertex, the edge used to reach
// it (or -1) and whether it was traversed forwards.
struct SpanningTree {
  std::vector<std::int64_t> parent_edge;
  std::vector<bool> forward;
  std::vector<bool> in_tree;  // per edge
};
SpanningTree spanning_tree(const StallingsGraph& s);

}  // namespace rfrp::covers
