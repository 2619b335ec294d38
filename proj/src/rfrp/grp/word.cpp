#include "rfrp/grp/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "rfrp/errors.hpp"

namespace rfrp::grp {

std::vector<Letter> free_reduce(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw InputError("malformed word: letter index 0");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word Word::reduce(const std::vector<Letter>& raw) { return Word(free_reduce(raw)); }

int Word::max_generator() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, std::abs(l));
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = -l;
  return Word(std::move(out));
}

Word Word::power(long k) const {
  if (k < 0) return inverse().power(-k);
  Word out;
  for (long i = 0; i < k; ++i) out *= *this;
  return out;
}

Word Word::operator*(const Word& other) const {
  Word out = *this;
  out *= other;
  return out;
}

Word& Word::operator*=(const Word& other) {
  for (Letter l : other.letters_) {
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
  return *this;
}

Word Word::cyclically_reduced() const {
  std::size_t b = 0, e = letters_.size();
  while (e - b >= 2 && letters_[b] == -letters_[e - 1]) {
    ++b;
    --e;
  }
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(b),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(e)));
}

bool Word::operator<(const Word& o) const {
  if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
  return letters_ < o.letters_;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

namespace {

class WordParser {
 public:
  WordParser(const std::string& s, const std::vector<std::string>& names) : s_(s), names_(names) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse word \"" + s_ + "\": " + why);
  }

  Word sequence() {
    Word w;
    for (;;) {
      skip_space();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c == ',' || c == ']' || c == ')') break;
      if (c == '.' || c == '*') {
        ++pos_;
        continue;
      }
      if (c == '1' && w.empty()) {  // "1" denotes the identity
        ++pos_;
        continue;
      }
      w *= atom_with_exponent();
    }
    return w;
  }

  Word atom_with_exponent() {
    Word a = atom();
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      if (num.empty() || num == "-" || num == "+") fail("missing exponent");
      a = a.power(std::stol(num));
    }
    return a;
  }

  Word atom() {
    char c = s_[pos_];
    if (c == '[') {
      ++pos_;
      Word u = sequence();
      expect(',');
      Word v = sequence();
      expect(']');
      return commutator(u, v);
    }
    if (c == '(') {
      ++pos_;
      Word u = sequence();
      expect(')');
      return u;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // Longest matching generator name, case-folded; uppercase initial = inverse.
      bool inv = std::isupper(static_cast<unsigned char>(c));
      std::size_t best_len = 0;
      int best = 0;
      for (std::size_t g = 0; g < names_.size(); ++g) {
        const std::string& n = names_[g];
        if (n.empty() || pos_ + n.size() > s_.size()) continue;
        bool ok = true;
        for (std::size_t k = 0; k < n.size() && ok; ++k) {
          char have = s_[pos_ + k];
          if (k == 0) have = static_cast<char>(std::tolower(static_cast<unsigned char>(have)));
          ok = have == n[k];
        }
        if (ok && n.size() > best_len) {
          best_len = n.size();
          best = static_cast<int>(g) + 1;
        }
      }
      if (best == 0) fail("unknown generator '" + std::string(1, c) + "'");
      pos_ += best_len;
      return Word::generator(inv ? -best : best);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  const std::string& s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

bool single_letter_names(const std::vector<std::string>& names) {
  return std::all_of(names.begin(), names.end(), [](const std::string& n) {
    return n.size() == 1 && std::islower(static_cast<unsigned char>(n[0]));
  });
}

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  return WordParser(text, names).parse();
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  if (single_letter_names(names) && static_cast<std::size_t>(w.max_generator()) <= names.size()) {
    for (Letter l : w.letters()) {
      char c = names[static_cast<std::size_t>(std::abs(l) - 1)][0];
      out.push_back(l > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return out;
  }
  for (std::size_t i = 0; i < w.length(); ++i) {
    Letter l = w[i];
    if (i) out.push_back('.');
    std::size_t g = static_cast<std::size_t>(std::abs(l));
    out += g <= names.size() ? names[g - 1] : "x" + std::to_string(g);
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace rfrp::grp
