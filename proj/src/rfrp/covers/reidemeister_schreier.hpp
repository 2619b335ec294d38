#pragma once

#include <cstdint>
#include <vector>

#include "rfrp/covers/coset_table.hpp"
#include "rfrp/grp/abelian_hom.hpp"
#include "rfrp/grp/presentation.hpp"

namespace rfrp::covers {

// Output of the bounded Tietze pass: the surviving generators are renumbered
// 1..generators and every original generator is expressed in them.
struct Simplified {
  int generators = 0;
  std::vector<grp::Word> relators;
  std::vector<grp::Word> substitution;  // indexed by original generator - 1
};

// Removes generators defined by relators of length one or two, iterated to a
// fixpoint, then cyclically reduces and deduplicates relators.
Simplified simplify(int generators, const std::vector<grp::Word>& relators);

// Rewrites words of the ambient group lying in the subgroup into subgroup generators.
struct Rewriter {
  std::vector<std::vector<std::int32_t>> schreier;  // [generator-1][coset], -1 on tree edges
  std::vector<grp::Word> substitution;              // Schreier generator -> simplified word

  // Word in Schreier generators read along w from coset `start`; returns the end coset too.
  grp::Word schreier_word(const grp::Word& w, const CosetTable& t, std::uint32_t start, std::uint32_t* end) const;
  // Throws InputError when w is not in the subgroup.
  grp::Word rewrite(const grp::Word& w, const CosetTable& t) const;
};

struct SubgroupPresentation {
  grp::Presentation presentation;
  CosetTable table;
  Rewriter rewriter;
  std::size_t schreier_generators = 0;   // before simplification
  std::vector<grp::Word> generator_words; // each simplified generator as an ambient word
};

// Coset table of ker h for a finite abelian target, transversal in shortlex order.
CosetTable quotient_table(const grp::Presentation& g, const grp::AbelianHom& h, const Bounds& bounds);

SubgroupPresentation reidemeister_schreier(const grp::Presentation& g, const CosetTable& t, const Bounds& bounds);
SubgroupPresentation reidemeister_schreier(const grp::Presentation& g, const grp::AbelianHom& h,
                                           const Bounds& bounds = {});

}  // namespace rfrp::covers
