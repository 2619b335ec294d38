#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfrp/grp/finite_quotients.hpp"
#include "rfrp/grp/presentation.hpp"

namespace rfrp::filtration {

// Declared circle bundle over a closed orientable surface of the given genus.
struct CircleBundleHint {
  int genus = 0;
  long euler = 0;
};

struct TorsionHint {
  grp::Word element;
  long order = 0;
};

struct BatteryHints {
  std::optional<CircleBundleHint> circle_bundle;
  bool nilpotent = false;
  std::optional<TorsionHint> torsion;
};

BatteryHints hints_from_json(const nlohmann::json& j, const grp::Presentation& g);
nlohmann::json hints_to_json(const BatteryHints& h, const grp::Presentation& g);

struct FiredRule {
  std::string id;
  nlohmann::json evidence;
};

// A fired rule means the group is not RFRp for any prime. An empty report says nothing.
struct ObstructionReport {
  std::size_t b1 = 0;
  std::string h1;
  std::vector<FiredRule> fired;
  std::vector<std::string> notes;

  bool fires(const std::string& id) const;
};

ObstructionReport obstruction_battery(const grp::Presentation& g, const BatteryHints& hints = {});
nlohmann::json to_json(const ObstructionReport& r);

// Re-checks the machine-checkable part of every fired rule against g.
bool verify_report(const grp::Presentation& g, const nlohmann::json& report, std::string* why = nullptr);

// Cyclically reduced r = u^k with k maximal; k = 1 when r is not a proper power.
std::pair<grp::Word, long> primitive_root(const grp::Word& r);

enum class Verdict { VirtuallyRfrpAllPrimes, NotRfrpAnyPrimeEvenVirtually };

// Labels: S3, S2xR, R3, Nil, Sol, H2xR, PSLtilde, H3.
Verdict geometry_verdict(const std::string& label);
const std::vector<std::string>& geometry_labels();
std::string verdict_name(Verdict v);

}  // namespace rfrp::filtration
