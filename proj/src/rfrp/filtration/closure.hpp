#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfrp/filtration/separation.hpp"

namespace rfrp::filtration {

// H given by its own presentation; images[k] is the word in G of H's generator k+1.
struct SubgroupEmbedding {
  grp::Presentation h;
  std::vector<grp::Word> images;
};

struct InducedLevel {
  int j = 1;
  std::size_t h_index = 1;  // [H : H_j]
  bool witnessed = false;   // some G_i with i <= depth has G_i ∩ H inside H_j
  int witness_depth = 0;    // least such i
};

struct InducedTopologyReport {
  int p = 2;
  int depth = 1;
  std::vector<std::size_t> trace_index;  // [H : G_i ∩ H] for i = 1..depth
  std::vector<InducedLevel> levels;
  bool all_witnessed() const;
};

InducedTopologyReport induced_topology_report(const grp::Presentation& g, const SubgroupEmbedding& sub, int p,
                                              int depth, covers::Bounds bounds = {});
nlohmann::json to_json(const InducedTopologyReport& r);

enum class EdgeClosureStatus { Certified, Inconclusive, NotSeparableInput };

struct EdgeClosureResult {
  EdgeClosureStatus status = EdgeClosureStatus::Inconclusive;
  grp::Presentation ambient;  // Z x F_n, t first
  grp::Word commutator;       // [x, w] with the central letters dropped
  std::optional<SeparationResult> separation;
};

// Ambient Z x F_n with t = generator 1 and x = generator x_index. Certifies that w
// lies outside <t, x> in some quotient G/K_{d+1} by separating [x, w] from 1 there.
EdgeClosureResult edge_closure_check(int x_index, const grp::Word& w, int p, int max_depth, int free_rank = 2,
                                     covers::Bounds bounds = {});
nlohmann::json to_json(const EdgeClosureResult& r);
std::string status_name(EdgeClosureStatus s);

}  // namespace rfrp::filtration
