#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfrp/covers/homology_tower.hpp"
#include "rfrp/filtration/filtration.hpp"

namespace rfrp::filtration {

// What is known about w at one level K_i that contains it.
struct LevelEvidence {
  int depth = 1;
  std::vector<BigInt> h1_image;  // torsion coordinates first, then free
  std::size_t torsion_coordinates = 0;
  std::vector<BigInt> divisors;
  bool torsion = true;  // all free coordinates vanish
  std::vector<std::int64_t> layer_image;
};

enum class Method { Automatic, ReidemeisterSchreier, HomologyTower };

// A word is certified at depth d when it lies in K_d but not in K_{d+1}; the
// finite quotient G/K_{d+1} then separates it from the identity.
// Inconclusive at depth D means the word lies in K_{D+1}.
struct SeparationResult {
  bool separated = false;
  int depth = 0;
  int max_depth = 0;
  int p = 2;
  grp::Word word;
  std::string method;
  BigInt quotient_order;  // |G/K_{depth+1}|, when known
  BigInt image;           // coset id of w in G/K_{depth+1}, nonzero when separated
  std::vector<LevelEvidence> evidence;
  nlohmann::json replay;  // self-contained data for third-party checking
};

SeparationResult separate(const Filtration& f, const grp::Word& w, int max_depth);
SeparationResult separate(const grp::Presentation& g, const grp::Word& w, int p, int max_depth,
                          covers::Bounds bounds = {}, Method method = Method::Automatic);
// Free groups only: the lazy tower reaches depths beyond the coset-table bounds.
SeparationResult separate_in_free_group(int rank, const grp::Word& w, int p, int max_depth);

nlohmann::json to_json(const SeparationResult& r, const grp::Presentation& g);

struct ReplayOutcome {
  bool ok = false;
  std::string detail;
};
// Checks a certificate produced by to_json. Table certificates are verified from
// the stored data alone (the relators act trivially, the word acts nontrivially);
// tower certificates are recomputed.
ReplayOutcome replay(const nlohmann::json& certificate);

}  // namespace rfrp::filtration
