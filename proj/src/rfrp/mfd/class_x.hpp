#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfrp/covers/stallings.hpp"
#include "rfrp/grp/presentation.hpp"
#include "rfrp/linalg/abelian.hpp"

namespace rfrp::mfd {

enum class Color { L, P };

// Vertex piece S^1 x S_v, S_v of genus g with m boundary circles.
struct XVertex {
  int id = 0;
  Color color = Color::L;
  int genus = 0;
  int boundary = 1;
  long euler = 0;
};

// Flip gluing of boundary slot slot_a of vertex a to slot slot_b of vertex b (indices).
struct XEdge {
  std::size_t a = 0, b = 0;
  int slot_a = 0, slot_b = 0;
};

struct ClassXGraph {
  std::vector<XVertex> vertices;
  std::vector<XEdge> edges;

  std::size_t degree(std::size_t v) const;
  std::size_t index_of(int id) const;  // throws InputError for an unknown id
};

// {"vertices":[{"id":0,"color":"L","genus":0,"boundary":3,"euler":0},...],"edges":[[0,3],...]}.
// An edge may carry explicit slots as [a, b, slot_a, slot_b]; otherwise slots are
// assigned per vertex in edge order.
ClassXGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const ClassXGraph& g);
std::string to_dot(const ClassXGraph& g, const std::string& name = "classx");

struct AxiomCheck {
  std::string id;  // X1, X2, X3', X3'', X4', X4'', X5
  bool ok = true;
  std::vector<std::string> offenders;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  std::string summary() const;  // failed axioms with offenders
};

ValidationReport validate_class_x(const ClassXGraph& g);
nlohmann::json to_json(const ValidationReport& r);

// Generators of the Mayer-Vietoris presentation and its relation matrix.
struct MVPresentation {
  std::vector<std::string> names;                // one per column
  linalg::IntMatrix relations;                   // rows are relations
  std::vector<std::size_t> t;                    // column of t_v
  std::vector<std::vector<std::size_t>> b;       // column of b_{v,slot}
  std::vector<std::vector<std::size_t>> w;       // columns spanning W_v
  std::vector<std::size_t> loops;                // b1 of the graph
  std::vector<std::vector<std::size_t>> xi;      // Xi_L: the free slots of L except the first
  std::vector<std::size_t> euler_rows;           // relation row of each vertex
};

struct MVResult {
  linalg::AbelianStructure h1;
  MVPresentation presentation;
};

// Throws InputError when validation fails.
MVResult mv_h1(const ClassXGraph& g);

// The t_L classes in <B_V, t_v> / Xi: rank of their span and of the whole group.
struct TLGenerationCheck {
  std::size_t t_rank = 0;
  std::size_t group_rank = 0;
  std::size_t l_count = 0;
  bool free_of_full_rank() const { return t_rank == l_count && group_rank == l_count; }
};
TLGenerationCheck tl_generation_check(const ClassXGraph& g);

struct InclusionReport {
  std::size_t vertex = 0;
  linalg::IntMatrix matrix;  // rows: t_v, b_{v,1..m-1}, W_v; columns: free coordinates of H1(X)
  std::size_t source_rank = 0;
  std::vector<linalg::BigInt> diagonal;
  bool injective = false;
  bool split = false;
  bool below_girth_threshold = false;
};

InclusionReport vertex_inclusion(const ClassXGraph& g, const MVResult& mv, std::size_t v);
nlohmann::json to_json(const InclusionReport& r);

// Graph of groups with Z x F vertex groups and flip edge identifications.
grp::Presentation pi1_presentation(const ClassXGraph& g);

covers::StallingsGraph underlying_graph(const ClassXGraph& g);
// Zero for a forest.
std::size_t graph_girth(const ClassXGraph& g);

struct GraphCover {
  covers::StallingsGraph cover;
  std::vector<std::uint32_t> vertex_map;  // cover vertex -> base vertex
  std::vector<std::size_t> edge_map;      // cover edge -> base edge
  std::size_t girth = 0;                  // zero for a forest
  int rounds = 0;                         // homology covers taken
};

// Iterated mod-p homology covers until the girth is at least min_girth.
GraphCover girth_fixing_cover(const covers::StallingsGraph& base, int p, std::size_t min_girth = 6,
                              std::uint64_t vertex_bound = 1u << 20);
nlohmann::json to_json(const GraphCover& c);

// Connected valid class-X graph with at most max_vertices vertices, no 4-cycles.
ClassXGraph random_class_x_graph(std::mt19937_64& rng, std::size_t max_vertices = 12);

}  // namespace rfrp::mfd
