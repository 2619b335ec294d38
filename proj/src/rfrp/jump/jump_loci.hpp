#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfrp/grp/abelian_hom.hpp"
#include "rfrp/grp/presentation.hpp"
#include "rfrp/jump/cyclotomic.hpp"

namespace rfrp::jump {

// Character of TF H1 sending basis vector k to zeta_m^{exponents[k]}.
struct CharacterSpec {
  int order = 1;
  std::vector<std::int64_t> exponents;
  bool trivial() const;
};

// Character given on the generators: x_j -> zeta_m^{values[j]}.
struct GeneratorCharacter {
  int order = 1;
  std::vector<std::int64_t> values;
  bool trivial() const;
};

struct JumpReport {
  CharacterSpec character;
  std::size_t dim_h1 = 0;
  std::size_t memberships = 0;  // largest i with the character in V_i
};

GeneratorCharacter on_generators(const grp::Presentation& g, const CharacterSpec& chi);
// Lowers the order to the exact order of the character.
GeneratorCharacter normalized(GeneratorCharacter c);

// Fox Jacobian evaluated at a generator-level character, entries in Z[zeta_m].
std::vector<std::vector<CycloElement>> fox_at(const grp::Presentation& g, const GeneratorCharacter& c);

inline constexpr std::uint64_t default_scan_seed = 0x5eed0000u;

struct RankStats {
  std::size_t modular_agree = 0;
  std::size_t exact_fallbacks = 0;
};

// n - 1 - rank of the evaluated Jacobian for nontrivial characters, b1 for the trivial one.
std::size_t dim_h1_at(const grp::Presentation& g, const CharacterSpec& chi, RankStats* stats = nullptr);
std::size_t dim_h1_at(const grp::Presentation& g, const GeneratorCharacter& chi, RankStats* stats = nullptr);
// Same dimension with the rank taken exactly over Q(zeta_m) only.
std::size_t dim_h1_exact(const grp::Presentation& g, const GeneratorCharacter& chi);

JumpReport jump_report(const grp::Presentation& g, const CharacterSpec& chi);

// b1 of ker h from the characters of the finite target.
std::size_t predicted_cover_b1(const grp::Presentation& g, const grp::AbelianHom& h, int jobs = 1);
// b1 of ker h from a Reidemeister-Schreier presentation.
std::size_t oracle_cover_b1(const grp::Presentation& g, const grp::AbelianHom& h);

// Characters of each exact order with dim_h1 >= 1, sorted by order then exponents.
// When an order has more than `budget` characters, `budget` of them are drawn
// with the generator seeded by seed + order instead.
std::vector<JumpReport> torsion_point_scan(const grp::Presentation& g, const std::set<int>& orders,
                                           std::size_t budget = 100000, int jobs = 1,
                                           std::uint64_t seed = default_scan_seed);

nlohmann::json to_json(const JumpReport& r);
CharacterSpec character_from_json(const nlohmann::json& j);
// {"moduli": [3], "images": [[1],[0]]}
grp::AbelianHom hom_from_json(const nlohmann::json& j, const grp::Presentation& g);
// "zN": the first free coordinate of H1 reduced mod N; "tfN": all of TF H1 mod N.
grp::AbelianHom named_quotient(const std::string& name, const grp::Presentation& g);

}  // namespace rfrp::jump
