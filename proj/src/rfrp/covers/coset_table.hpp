#pragma once

#include <cstdint>
#include <vector>

#include "rfrp/grp/word.hpp"

namespace rfrp::covers {

struct Bounds {
  std::uint64_t index = 4096;
  std::uint64_t generators = 20000;
};

// Right action of generators on cosets; coset 0 is the subgroup itself.
struct CosetTable {
  std::size_t index = 1;
  std::vector<std::vector<std::uint32_t>> action;   // [generator-1][coset]
  std::vector<std::vector<std::uint32_t>> inverse;  // [generator-1][coset]
  std::vector<grp::Word> coset_reps;
  std::vector<grp::Letter> tree_letter;  // last letter of each rep, 0 for coset 0
  std::vector<std::uint32_t> parent;     // coset of the rep with its last letter removed

  int generators() const { return static_cast<int>(action.size()); }
  std::uint32_t act(std::uint32_t c, grp::Letter l) const {
    return l > 0 ? action[static_cast<std::size_t>(l - 1)][c] : inverse[static_cast<std::size_t>(-l - 1)][c];
  }
  // True when (c, x) is a spanning-tree edge of the transversal.
  bool tree_edge(std::uint32_t c, int x) const;

  // Fills inverse, coset_reps and tree_letter from action by breadth-first
  // search in the letter order 1, -1, 2, -2, ...
  void finish();

  static CosetTable trivial(int generators);
  bool valid() const;  // permutations, prefix-closed transversal, reps land on their cosets
};

std::uint32_t membership(const grp::Word& w, const CosetTable& t);

}  // namespace rfrp::covers
