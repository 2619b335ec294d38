#pragma once

#include <cstdint>
#include <vector>

#include "rfrp/covers/coset_table.hpp"
#include "rfrp/covers/reidemeister_schreier.hpp"
#include "rfrp/grp/abelian_hom.hpp"
#include "rfrp/grp/presentation.hpp"
#include "rfrp/linalg/abelian.hpp"

namespace rfrp::filtration {

using linalg::BigInt;

// One stage K_i of the standard filtration of G.
struct FiltrationLevel {
  int depth = 1;
  grp::Presentation presentation;  // K_i
  linalg::AbelianStructure h1;     // H1(K_i)
  linalg::AbelianStructure layer;  // K_i / K_{i+1} = (Z/p)^{b1(K_i)}
  grp::AbelianHom to_layer;        // K_i -> layer
  grp::SmallHom to_layer_small;
  covers::CosetTable table;        // K_i in G
  // transfer[x-1][c]: rep(c) x rep(c x)^-1 written in the generators of K_i
  std::vector<std::vector<grp::Word>> transfer;
  std::vector<grp::Word> generator_words;  // generators of K_i as words in G

  std::size_t index() const { return table.index; }
  std::size_t layer_rank() const { return h1.rank; }
};

// Outcome of the structural checks run while a level is built.
struct LevelChecks {
  bool layer_elementary = true;
  bool nested = true;
  bool normal = true;
};

class Filtration {
 public:
  Filtration(grp::Presentation g, int p, covers::Bounds bounds = {});

  const grp::Presentation& group() const { return g_; }
  int p() const { return p_; }
  int depth() const { return static_cast<int>(levels_.size()); }
  const FiltrationLevel& level(int i) const { return levels_.at(static_cast<std::size_t>(i - 1)); }
  const LevelChecks& checks(int i) const { return checks_.at(static_cast<std::size_t>(i - 1)); }

  // Builds K_{d+1} from K_d until `depth` levels exist.
  void extend_to(int depth);

  // w must lie in K_i; returns it in the generators of K_i.
  grp::Word rewrite(const grp::Word& w, int i) const;
  std::uint32_t coset(const grp::Word& w, int i) const;  // coset of w in G/K_i
  bool contains(const grp::Word& w, int i) const;         // i may be depth() + 1

  // Image of w (in K_i) in the layer K_i/K_{i+1}.
  std::vector<std::int64_t> layer_image(const grp::Word& w, int i) const;

  // Order of G/K_{i}, for 1 <= i <= depth() + 1.
  BigInt quotient_order(int i) const;

 private:
  void push_level(FiltrationLevel level);
  grp::Word rewrite_from(const FiltrationLevel& lv, const grp::Word& w, std::uint32_t start, std::uint32_t* end) const;

  grp::Presentation g_;
  int p_;
  covers::Bounds bounds_;
  std::vector<FiltrationLevel> levels_;
  std::vector<LevelChecks> checks_;
};

// Convenience wrapper: levels 1..depth.
Filtration filtrate(const grp::Presentation& g, int p, int depth, covers::Bounds bounds = {});

}  // namespace rfrp::filtration
