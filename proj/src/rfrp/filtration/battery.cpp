#include "rfrp/filtration/battery.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "rfrp/errors.hpp"
#include "rfrp/linalg/abelian.hpp"

namespace rfrp::filtration {

using linalg::BigInt;

std::pair<grp::Word, long> primitive_root(const grp::Word& r) {
  const grp::Word c = r.cyclically_reduced();
  const auto& ls = c.letters();
  const std::size_t n = ls.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool ok = true;
    for (std::size_t i = period; i < n && ok; ++i) ok = ls[i] == ls[i - period];
    if (ok) return {grp::Word::reduce(std::vector<grp::Letter>(ls.begin(), ls.begin() + static_cast<long>(period))),
                    static_cast<long>(n / period)};
  }
  return {c, 1};
}

namespace {

// H1 of a circle bundle over the genus-g surface with Euler number e.
bool bundle_h1_matches(const linalg::AbelianStructure& h1, const CircleBundleHint& b) {
  std::vector<BigInt> div;
  for (const auto& d : h1.divisors)
    if (d > 1) div.push_back(d);
  const long e = std::labs(b.euler);
  const std::size_t rank = static_cast<std::size_t>(2 * b.genus) + (e == 0 ? 1 : 0);
  std::vector<BigInt> want;
  if (e > 1) want.push_back(BigInt(e));
  return h1.rank == rank && div == want;
}

nlohmann::json bundle_json(const CircleBundleHint& b) { return {{"genus", b.genus}, {"euler", b.euler}}; }

}  // namespace

BatteryHints hints_from_json(const nlohmann::json& j, const grp::Presentation& g) {
  BatteryHints h;
  if (j.is_null()) return h;
  if (j.contains("circle_bundle")) {
    const auto& cb = j.at("circle_bundle");
    h.circle_bundle = CircleBundleHint{cb.at("genus").get<int>(), cb.at("euler").get<long>()};
    if (h.circle_bundle->genus < 0) throw InputError("hints: negative genus");
  }
  h.nilpotent = j.value("nilpotent", false);
  if (j.contains("torsion")) {
    const auto& t = j.at("torsion");
    h.torsion = TorsionHint{g.parse(t.at("element").get<std::string>()), t.at("order").get<long>()};
    if (h.torsion->order < 2 || h.torsion->element.empty()) throw InputError("hints: torsion needs a nontrivial element of order >= 2");
  }
  return h;
}

nlohmann::json hints_to_json(const BatteryHints& h, const grp::Presentation& g) {
  nlohmann::json j = nlohmann::json::object();
  if (h.circle_bundle) j["circle_bundle"] = bundle_json(*h.circle_bundle);
  if (h.nilpotent) j["nilpotent"] = true;
  if (h.torsion) j["torsion"] = {{"element", g.format(h.torsion->element)}, {"order", h.torsion->order}};
  return j;
}

bool ObstructionReport::fires(const std::string& id) const {
  return std::any_of(fired.begin(), fired.end(), [&](const FiredRule& r) { return r.id == id; });
}

ObstructionReport obstruction_battery(const grp::Presentation& g, const BatteryHints& hints) {
  ObstructionReport rep;
  const auto h1 = linalg::abelianization(g);
  rep.b1 = h1.rank;
  rep.h1 = linalg::describe(h1);

  // One sweep serves both rules that need a nonabelian quotient.
  std::optional<grp::QuotientWitness> witness;
  bool searched = false;
  auto find_witness = [&]() -> const std::optional<grp::QuotientWitness>& {
    if (searched) return witness;
    searched = true;
    for (const auto& t : grp::quotient_sweep_targets()) {
      try {
        witness = grp::find_nonabelian_quotient(g, t);
      } catch (const ResourceLimit&) {
        rep.notes.push_back("quotient search budget exhausted for " + t.name);
        continue;
      }
      if (witness) break;
    }
    if (!witness) rep.notes.push_back("no nonabelian quotient among the sweep targets");
    return witness;
  };

  if (rep.b1 < 2 && find_witness()) {
    rep.fired.push_back({"B1_TOO_SMALL", {{"b1", rep.b1}, {"h1", rep.h1}, {"quotient", grp::witness_to_json(*witness)}}});
  }

  std::vector<nlohmann::json> torsion;
  if (g.relators().size() == 1) {
    auto [root, k] = primitive_root(g.relators()[0]);
    if (k >= 2)
      torsion.push_back({{"kind", "proper-power relator"}, {"root", g.format(root)}, {"exponent", k},
                         {"root_letters", root.letters()}});
  }
  if (hints.torsion)
    torsion.push_back({{"kind", "declared"}, {"element", g.format(hints.torsion->element)}, {"order", hints.torsion->order}});

  if (hints.circle_bundle) {
    const auto& b = *hints.circle_bundle;
    if (!bundle_h1_matches(h1, b)) {
      rep.notes.push_back("circle bundle hint does not match H1 = " + rep.h1 + "; hint ignored");
    } else if (b.genus == 0 && std::labs(b.euler) >= 2) {
      // Lens space: the fundamental group is finite cyclic.
      torsion.push_back({{"kind", "circle bundle over the sphere"}, {"bundle", bundle_json(b)}, {"h1", rep.h1}});
    } else if (b.genus >= 1 && b.euler != 0) {
      rep.fired.push_back({"NONZERO_EULER_CENTRAL_EXT", {{"bundle", bundle_json(b)}, {"h1", rep.h1}}});
    }
  }
  if (!torsion.empty()) rep.fired.push_back({"TORSION_IN_INPUT_DATA", {{"sources", torsion}}});

  if (hints.nilpotent && find_witness())
    rep.fired.push_back({"NONABELIAN_NILPOTENT_DECLARED", {{"quotient", grp::witness_to_json(*witness)}}});
  return rep;
}

nlohmann::json to_json(const ObstructionReport& r) {
  nlohmann::json fired = nlohmann::json::array();
  for (const auto& f : r.fired) fired.push_back({{"rule", f.id}, {"evidence", f.evidence}});
  return {{"kind", "obstruction-report"},
          {"b1", r.b1},
          {"h1", r.h1},
          {"fired", fired},
          {"notes", r.notes},
          {"conclusion", r.fired.empty() ? "no rule fired; nothing is claimed" : "not RFRp for any prime"}};
}

bool verify_report(const grp::Presentation& g, const nlohmann::json& report, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  try {
    const auto h1 = linalg::abelianization(g);
    for (const auto& f : report.at("fired")) {
      const std::string id = f.at("rule").get<std::string>();
      const auto& ev = f.at("evidence");
      if (id == "B1_TOO_SMALL" || id == "NONABELIAN_NILPOTENT_DECLARED") {
        if (id == "B1_TOO_SMALL" && h1.rank >= 2) return fail("b1 is at least 2");
        std::string w;
        if (!grp::verify_witness(g, grp::witness_from_json(ev.at("quotient")), &w)) return fail(id + ": " + w);
      } else if (id == "NONZERO_EULER_CENTRAL_EXT") {
        CircleBundleHint b{ev.at("bundle").at("genus").get<int>(), ev.at("bundle").at("euler").get<long>()};
        if (b.genus < 1 || b.euler == 0 || !bundle_h1_matches(h1, b)) return fail("bundle data inconsistent with H1");
      } else if (id == "TORSION_IN_INPUT_DATA") {
        for (const auto& s : ev.at("sources")) {
          const std::string kind = s.at("kind").get<std::string>();
          if (kind == "proper-power relator") {
            if (g.relators().size() != 1) return fail("not a one-relator presentation");
            grp::Word root = grp::Word::reduce(s.at("root_letters").get<std::vector<int>>());
            long k = s.at("exponent").get<long>();
            if (k < 2 || primitive_root(g.relators()[0]) != std::make_pair(root, k)) return fail("relator is not the stated power");
          } else if (kind == "circle bundle over the sphere") {
            CircleBundleHint b{s.at("bundle").at("genus").get<int>(), s.at("bundle").at("euler").get<long>()};
            if (b.genus != 0 || std::labs(b.euler) < 2 || !bundle_h1_matches(h1, b)) return fail("bundle data inconsistent with H1");
          } else if (kind != "declared") {
            return fail("unknown torsion source " + kind);
          }
        }
      } else {
        return fail("unknown rule " + id);
      }
    }
  } catch (const std::exception& e) {
    return fail(std::string("malformed report: ") + e.what());
  }
  return true;
}

const std::vector<std::string>& geometry_labels() {
  static const std::vector<std::string> labels{"S3", "S2xR", "R3", "Nil", "Sol", "H2xR", "PSLtilde", "H3"};
  return labels;
}

Verdict geometry_verdict(const std::string& label) {
  static const std::map<std::string, Verdict> table{
      {"S3", Verdict::VirtuallyRfrpAllPrimes},           {"S2xR", Verdict::VirtuallyRfrpAllPrimes},
      {"R3", Verdict::VirtuallyRfrpAllPrimes},           {"H2xR", Verdict::VirtuallyRfrpAllPrimes},
      {"H3", Verdict::VirtuallyRfrpAllPrimes},           {"Nil", Verdict::NotRfrpAnyPrimeEvenVirtually},
      {"Sol", Verdict::NotRfrpAnyPrimeEvenVirtually},    {"PSLtilde", Verdict::NotRfrpAnyPrimeEvenVirtually},
  };
  auto it = table.find(label);
  if (it == table.end()) throw InputError("unknown geometry label '" + label + "'");
  return it->second;
}

std::string verdict_name(Verdict v) {
  return v == Verdict::VirtuallyRfrpAllPrimes ? "VIRTUALLY_RFRP_ALL_PRIMES" : "NOT_RFRP_ANY_PRIME_EVEN_VIRTUALLY";
}

}  // namespace rfrp::filtration
