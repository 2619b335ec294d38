#include "rfrp/jump/jump_loci.hpp"

#include <cstdlib>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "rfrp/covers/reidemeister_schreier.hpp"
#include "rfrp/errors.hpp"
#include "rfrp/linalg/abelian.hpp"
#include "rfrp/util/parallel.hpp"

namespace rfrp::jump {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t to_small(const linalg::BigInt& b) {
  if (!b.fits_slong_p()) throw ResourceLimit("character: coefficient does not fit a machine word");
  return b.get_si();
}

// Least vector among k * c for units k mod m; Galois-conjugate characters share it.
GeneratorCharacter galois_canonical(const GeneratorCharacter& c) {
  GeneratorCharacter best = c;
  for (std::int64_t k = 2; k < c.order; ++k) {
    if (std::gcd(k, static_cast<std::int64_t>(c.order)) != 1) continue;
    GeneratorCharacter t{c.order, c.values};
    for (auto& v : t.values) v = mod(v * k, c.order);
    if (t.values < best.values) best = t;
  }
  return best;
}

std::size_t jacobian_rank(const std::vector<std::vector<CycloElement>>& fox, int order, RankStats* stats) {
  const auto qs = primes_one_mod(static_cast<std::uint64_t>(order), 3);
  std::vector<std::size_t> ranks;
  for (auto q : qs) ranks.push_back(rank_mod_q(fox, q, primitive_root_of_unity(static_cast<std::uint64_t>(order), q)));
  if (std::adjacent_find(ranks.begin(), ranks.end(), std::not_equal_to<>()) == ranks.end()) {
    if (stats) ++stats->modular_agree;
    return ranks[0];
  }
  if (stats) ++stats->exact_fallbacks;
  return rank_exact(fox, order);
}

void check_character(const grp::Presentation& g, const GeneratorCharacter& c) {
  if (c.order < 1) throw InputError("character: order must be positive");
  if (c.values.size() != static_cast<std::size_t>(g.n_generators()))
    throw InputError("character: one value per generator is required");
  for (const auto& r : g.relators()) {
    std::int64_t s = 0;
    for (grp::Letter l : r.letters()) s += l > 0 ? c.values[l - 1] : -c.values[-l - 1];
    if (mod(s, c.order) != 0) throw InputError("character: relator " + g.format(r) + " does not map to 1");
  }
}

}  // namespace

bool CharacterSpec::trivial() const {
  for (auto e : exponents)
    if (mod(e, order) != 0) return false;
  return true;
}

bool GeneratorCharacter::trivial() const {
  for (auto v : values)
    if (mod(v, order) != 0) return false;
  return true;
}

GeneratorCharacter on_generators(const grp::Presentation& g, const CharacterSpec& chi) {
  if (chi.order < 1) throw InputError("character: order must be positive");
  const auto h1 = linalg::abelianization(g);
  if (chi.exponents.size() != h1.rank)
    throw InputError("character: expected " + std::to_string(h1.rank) + " exponents, one per free H1 coordinate");
  GeneratorCharacter c{chi.order, std::vector<std::int64_t>(static_cast<std::size_t>(g.n_generators()), 0)};
  const std::size_t t = h1.torsion_count();
  for (std::size_t j = 0; j < c.values.size(); ++j) {
    std::int64_t v = 0;
    for (std::size_t k = 0; k < h1.rank; ++k) {
      const std::int64_t coord = to_small(linalg::BigInt(h1.projection(j, t + k) % chi.order));
      v = mod(v + coord * chi.exponents[k], chi.order);
    }
    c.values[j] = v;
  }
  return c;
}

GeneratorCharacter normalized(GeneratorCharacter c) {
  std::int64_t gcd = c.order;
  for (auto& v : c.values) {
    v = mod(v, c.order);
    gcd = std::gcd(gcd, v);
  }
  c.order = static_cast<int>(c.order / gcd);
  for (auto& v : c.values) v /= gcd;
  return c;
}

std::vector<std::vector<CycloElement>> fox_at(const grp::Presentation& g, const GeneratorCharacter& c) {
  const std::size_t n = static_cast<std::size_t>(g.n_generators());
  std::vector<std::vector<CycloElement>> m;
  for (const auto& r : g.relators()) {
    std::vector<CycloElement> row(n, CycloElement(static_cast<std::size_t>(c.order), 0));
    std::int64_t s = 0;  // exponent of the character on the current prefix
    for (grp::Letter l : r.letters()) {
      const std::size_t j = static_cast<std::size_t>(std::abs(l) - 1);
      if (l > 0) {
        row[j][static_cast<std::size_t>(s)] += 1;
        s = mod(s + c.values[j], c.order);
      } else {
        s = mod(s - c.values[j], c.order);
        row[j][static_cast<std::size_t>(s)] -= 1;
      }
    }
    m.push_back(std::move(row));
  }
  return m;
}

std::size_t dim_h1_at(const grp::Presentation& g, const GeneratorCharacter& chi, RankStats* stats) {
  check_character(g, chi);
  const auto c = normalized(chi);
  const std::size_t n = static_cast<std::size_t>(g.n_generators());
  if (c.trivial()) return linalg::abelianization(g).rank;
  return n - 1 - jacobian_rank(fox_at(g, c), c.order, stats);
}

std::size_t dim_h1_at(const grp::Presentation& g, const CharacterSpec& chi, RankStats* stats) {
  return dim_h1_at(g, on_generators(g, chi), stats);
}

std::size_t dim_h1_exact(const grp::Presentation& g, const GeneratorCharacter& chi) {
  check_character(g, chi);
  const auto c = normalized(chi);
  if (c.trivial()) return linalg::abelianization(g).rank;
  return static_cast<std::size_t>(g.n_generators()) - 1 - rank_exact(fox_at(g, c), c.order);
}

JumpReport jump_report(const grp::Presentation& g, const CharacterSpec& chi) {
  JumpReport r;
  r.character = chi;
  r.dim_h1 = dim_h1_at(g, chi);
  r.memberships = r.dim_h1;
  return r;
}

namespace {

// Dimensions for a list of characters, one rank computation per Galois orbit.
std::vector<std::size_t> dims(const grp::Presentation& g, const std::vector<GeneratorCharacter>& chars, int jobs) {
  std::map<std::pair<int, std::vector<std::int64_t>>, std::size_t> orbit_of;
  std::vector<GeneratorCharacter> reps;
  std::vector<std::size_t> which(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    auto c = galois_canonical(normalized(chars[i]));
    auto [it, fresh] = orbit_of.emplace(std::make_pair(c.order, c.values), reps.size());
    if (fresh) reps.push_back(c);
    which[i] = it->second;
  }
  std::vector<std::size_t> rep_dims(reps.size());
  util::parallel_for(reps.size(), jobs, [&](std::size_t i) { rep_dims[i] = dim_h1_at(g, reps[i]); });
  std::vector<std::size_t> out(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) out[i] = rep_dims[which[i]];
  return out;
}

}  // namespace

std::size_t predicted_cover_b1(const grp::Presentation& g, const grp::AbelianHom& h, int jobs) {
  if (!h.finite_target()) throw InputError("cover b1: the quotient must be finite");
  const auto small = grp::SmallHom::from(h);
  std::int64_t lcm = 1;
  for (auto d : small.moduli) lcm = std::lcm(lcm, d);
  if (lcm > 1'000'000) throw ResourceLimit("cover b1: character order too large");
  // Characters of the target that agree on the image of G are counted once, so a
  // non-surjective h is handled as its image.
  std::set<std::vector<std::int64_t>> seen;
  std::vector<GeneratorCharacter> chars;
  std::vector<std::int64_t> k(small.moduli.size(), 0);
  while (true) {
    GeneratorCharacter c{static_cast<int>(lcm), std::vector<std::int64_t>(static_cast<std::size_t>(g.n_generators()), 0)};
    for (std::size_t j = 0; j < c.values.size(); ++j) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < k.size(); ++i) v += k[i] * (lcm / small.moduli[i]) * small.images[j][i];
      c.values[j] = mod(v, lcm);
    }
    if (seen.insert(c.values).second) chars.push_back(c);
    std::size_t i = 0;
    while (i < k.size() && ++k[i] == small.moduli[i]) k[i++] = 0;
    if (i == k.size()) break;
  }
  std::size_t total = 0;
  for (auto d : dims(g, chars, jobs)) total += d;
  return total;
}

std::size_t oracle_cover_b1(const grp::Presentation& g, const grp::AbelianHom& h) {
  if (!h.finite_target()) throw InputError("cover b1: the quotient must be finite");
  auto sub = covers::reidemeister_schreier(g, h, covers::Bounds{});
  return linalg::abelianization(sub.presentation).rank;
}

std::vector<JumpReport> torsion_point_scan(const grp::Presentation& g, const std::set<int>& orders,
                                           std::size_t budget, int jobs, std::uint64_t seed) {
  const std::size_t b = linalg::abelianization(g).rank;
  std::vector<JumpReport> out;
  if (b == 0) return out;
  for (int m : orders) {
    if (m < 2) continue;
    std::set<std::vector<std::int64_t>> exps;
    auto exact_order = [&](const std::vector<std::int64_t>& e) {
      std::int64_t gcd = m;
      for (auto v : e) gcd = std::gcd(gcd, v);
      return gcd == 1;
    };
    const double total = std::pow(static_cast<double>(m), static_cast<double>(b));
    if (total <= static_cast<double>(budget)) {
      std::vector<std::int64_t> e(b, 0);
      while (true) {
        if (exact_order(e)) exps.insert(e);
        std::size_t i = b;
        while (i > 0 && ++e[i - 1] == m) e[--i] = 0;
        if (i == 0) break;
      }
    } else {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(m));
      std::uniform_int_distribution<std::int64_t> digit(0, m - 1);
      for (std::size_t s = 0; s < budget; ++s) {
        std::vector<std::int64_t> e(b);
        for (auto& v : e) v = digit(rng);
        if (exact_order(e)) exps.insert(e);
      }
    }
    std::vector<CharacterSpec> specs;
    std::vector<GeneratorCharacter> chars;
    for (const auto& e : exps) {
      specs.push_back({m, e});
      chars.push_back(on_generators(g, specs.back()));
    }
    auto d = dims(g, chars, jobs);
    for (std::size_t i = 0; i < specs.size(); ++i)
      if (d[i] >= 1) out.push_back({specs[i], d[i], d[i]});
  }
  return out;
}

nlohmann::json to_json(const JumpReport& r) {
  return {{"order", r.character.order}, {"exponents", r.character.exponents}, {"dim_h1", r.dim_h1},
          {"max_v_index", r.memberships}};
}

CharacterSpec character_from_json(const nlohmann::json& j) {
  return {j.at("order").get<int>(), j.at("exponents").get<std::vector<std::int64_t>>()};
}

grp::AbelianHom hom_from_json(const nlohmann::json& j, const grp::Presentation& g) {
  if (j.contains("tf_mod")) return linalg::tf_mod_q_hom(g, j.at("tf_mod").get<std::uint64_t>());
  std::vector<linalg::BigInt> moduli;
  for (auto v : j.at("moduli").get<std::vector<long>>()) moduli.emplace_back(v);
  std::vector<std::vector<linalg::BigInt>> images;
  for (const auto& row : j.at("images")) {
    std::vector<linalg::BigInt> r;
    for (auto v : row.get<std::vector<long>>()) r.emplace_back(v);
    images.push_back(std::move(r));
  }
  return grp::AbelianHom(g, std::move(moduli), std::move(images));
}

grp::AbelianHom named_quotient(const std::string& name, const grp::Presentation& g) {
  auto number = [&](std::size_t from) -> std::uint64_t {
    std::string digits = name.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
      throw InputError("unknown quotient '" + name + "'");
    std::uint64_t n = std::stoull(digits);
    if (n < 2) throw InputError("quotient '" + name + "' needs a modulus of at least 2");
    return n;
  };
  if (name.rfind("tf", 0) == 0) return linalg::tf_mod_q_hom(g, number(2));
  if (name.rfind("z", 0) != 0) throw InputError("unknown quotient '" + name + "'");
  std::uint64_t n = number(1);
  auto h1 = linalg::abelianization(g);
  if (h1.rank == 0) throw InputError("quotient '" + name + "' is undefined: b1 = 0");
  std::size_t col = h1.torsion_count();
  std::vector<std::vector<linalg::BigInt>> images;
  for (int j = 0; j < g.n_generators(); ++j) {
    linalg::BigInt v = h1.projection(static_cast<std::size_t>(j), col) % linalg::BigInt(n);
    if (v < 0) v += n;
    images.push_back({v});
  }
  return grp::AbelianHom(g, {linalg::BigInt(n)}, std::move(images));
}

}  // namespace rfrp::jump
