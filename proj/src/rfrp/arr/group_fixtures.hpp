#pragma once

#include <string>
#include <vector>

#include "rfrp/grp/presentation.hpp"

namespace rfrp::arr {

struct GroupFixture {
  std::string name;
  std::string description;
  std::string expected;  // documented behavior, e.g. RADICAL_NONTRIVIAL_EVIDENCE
  grp::Presentation presentation;
};

// Built from relator strings over single-letter generators.
grp::Presentation make_presentation(const std::vector<std::string>& names, const std::vector<std::string>& relators);

grp::Presentation free_group(int n);
grp::Presentation free_abelian(int n);
grp::Presentation surface_group(int genus);
// Z x F_n with the central generator t first.
grp::Presentation z_times_free(int n);
// Z^{p-1} (sum-zero lattice) extended by Z acting through the cyclic shift of order p.
grp::Presentation cyclic_shift_extension(int p);
grp::Presentation torus_knot_gluing();

const std::vector<GroupFixture>& group_fixtures();
// Resolves "f3", "z4", "surface3", "g7" style parametrized names as well.
const GroupFixture* find_group_fixture(const std::string& name);

}  // namespace rfrp::arr
