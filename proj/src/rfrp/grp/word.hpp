#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rfrp::grp {

using Letter = int;

// Freely reduced word in signed generator letters; k stands for x_|k|^sign(k).
class Word {
 public:
  Word() = default;

  // Reduces the input; throws InputError on a zero letter.
  static Word reduce(const std::vector<Letter>& raw);
  static Word generator(Letter g) { return reduce({g}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  int max_generator() const;

  Word inverse() const;
  Word power(long k) const;
  Word operator*(const Word& other) const;
  Word& operator*=(const Word& other);

  // Conjugates and rotates away matching ends.
  Word cyclically_reduced() const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator<(const Word& o) const;

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

// Stack-based free reduction of a raw letter sequence.
std::vector<Letter> free_reduce(const std::vector<Letter>& raw);

Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1

// Parses words such as "xyXY", "[x,y]z^-1", "(ab)^3" against generator names.
// Uppercase letters are inverses of the matching lowercase generator.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

// Renders with names when all are single lowercase letters, else as x1.x2^-1 style.
std::string format_word(const Word& w, const std::vector<std::string>& names);

}  // namespace rfrp::grp
