#include "rfrp/grp/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "rfrp/errors.hpp"

namespace rfrp::grp {

Presentation::Presentation(int n_generators, std::vector<Word> relators, std::vector<std::string> names)
    : n_(n_generators), names_(std::move(names)) {
  if (n_ < 0) throw InputError("presentation: negative generator count");
  if (names_.empty()) names_ = default_names(n_);
  if (static_cast<int>(names_.size()) != n_) throw InputError("presentation: name count differs from generator count");
  std::set<std::string> seen;
  for (const auto& nm : names_) {
    if (nm.empty() || !std::islower(static_cast<unsigned char>(nm[0])))
      throw InputError("presentation: generator names must start with a lowercase letter: \"" + nm + "\"");
    if (!seen.insert(nm).second) throw InputError("presentation: duplicate generator name \"" + nm + "\"");
  }
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    if (r.max_generator() > n_) throw InputError("presentation: relator uses a generator out of range");
    if (!r.empty()) relators_.push_back(std::move(r));
  }
}

std::vector<std::string> Presentation::default_names(int n, const std::string& stem) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

linalg::IntMatrix abelianized_relator_matrix(const Presentation& p) {
  linalg::IntMatrix m(p.relators().size(), static_cast<std::size_t>(p.n_generators()));
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (Letter l : p.relators()[r].letters()) {
      auto& e = m(r, static_cast<std::size_t>(std::abs(l) - 1));
      if (l > 0)
        ++e;
      else
        --e;
    }
  return m;
}

Presentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators")) throw InputError("presentation JSON needs a \"generators\" field");
  std::vector<std::string> names;
  int n = 0;
  const auto& g = j.at("generators");
  if (g.is_number_integer()) {
    n = g.get<int>();
    names = Presentation::default_names(n);
  } else if (g.is_array()) {
    for (const auto& x : g) {
      if (!x.is_string()) throw InputError("generator names must be strings");
      names.push_back(x.get<std::string>());
    }
    n = static_cast<int>(names.size());
  } else {
    throw InputError("\"generators\" must be an array of names or a count");
  }
  std::vector<Word> rels;
  if (j.contains("relators")) {
    const auto& rs = j.at("relators");
    if (!rs.is_array()) throw InputError("\"relators\" must be an array");
    for (const auto& r : rs) {
      if (r.is_string()) {
        rels.push_back(parse_word(r.get<std::string>(), names));
      } else if (r.is_array()) {
        std::vector<Letter> raw;
        for (const auto& l : r) {
          if (!l.is_number_integer()) throw InputError("relator letters must be integers");
          raw.push_back(l.get<int>());
        }
        rels.push_back(Word::reduce(raw));
      } else {
        throw InputError("relator must be a string or an integer array");
      }
    }
  }
  return Presentation(n, std::move(rels), std::move(names));
}

nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["generators"] = p.names();
  bool letters = std::all_of(p.names().begin(), p.names().end(), [](const std::string& s) { return s.size() == 1; });
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relators()) {
    if (letters)
      rels.push_back(format_word(r, p.names()));
    else
      rels.push_back(r.letters());
  }
  j["relators"] = rels;
  return j;
}

}  // namespace rfrp::grp
