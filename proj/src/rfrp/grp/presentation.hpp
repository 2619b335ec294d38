#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfrp/grp/word.hpp"
#include "rfrp/linalg/int_matrix.hpp"

namespace rfrp::grp {

// Finitely presented group. Relators are freely reduced; trivial ones are dropped.
class Presentation {
 public:
  Presentation() = default;
  Presentation(int n_generators, std::vector<Word> relators, std::vector<std::string> names = {});

  int n_generators() const { return n_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<std::string>& names() const { return names_; }

  Word parse(const std::string& text) const { return parse_word(text, names_); }
  std::string format(const Word& w) const { return format_word(w, names_); }

  // Default labels: a..z style when they fit, else x1, x2, ...
  static std::vector<std::string> default_names(int n, const std::string& stem = "x");

 private:
  int n_ = 0;
  std::vector<Word> relators_;
  std::vector<std::string> names_;
};

// Entry (r, j) is the exponent sum of generator j in relator r.
linalg::IntMatrix abelianized_relator_matrix(const Presentation& p);

// {"generators": ["x","y"], "relators": ["xxYYY"]}; relators may also be integer arrays
// and "generators" may be a plain count.
Presentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const Presentation& p);

}  // namespace rfrp::grp
