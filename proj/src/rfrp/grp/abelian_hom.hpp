#pragma once

#include <cstdint>
#include <vector>

#include "rfrp/grp/presentation.hpp"
#include "rfrp/linalg/int_matrix.hpp"

namespace rfrp::grp {

using linalg::BigInt;

// Homomorphism from a presented group to Z^r + Z/d_1 + ... .
// moduli[k] == 0 marks a free coordinate.
class AbelianHom {
 public:
  AbelianHom() = default;
  // Validates that every relator of the source maps to zero.
  AbelianHom(const Presentation& source, std::vector<BigInt> moduli, std::vector<std::vector<BigInt>> images);

  int source_generators() const { return n_; }
  const std::vector<BigInt>& moduli() const { return moduli_; }
  const std::vector<std::vector<BigInt>>& images() const { return images_; }
  std::size_t target_rank() const;
  std::vector<BigInt> target_divisors() const;  // the nonzero moduli
  bool finite_target() const { return target_rank() == 0; }
  BigInt target_order() const;  // product of moduli; requires a finite target

  std::vector<BigInt> reduce(std::vector<BigInt> v) const;

 private:
  int n_ = 0;
  std::vector<BigInt> moduli_;
  std::vector<std::vector<BigInt>> images_;
};

std::vector<BigInt> substitute_hom(const Word& w, const AbelianHom& h);

// Same map with machine-word coordinates; only for finite targets.
struct SmallHom {
  std::vector<std::int64_t> moduli;
  std::vector<std::vector<std::int64_t>> images;  // per generator

  static SmallHom from(const AbelianHom& h);
  std::vector<std::int64_t> apply(const Word& w) const;
  void accumulate(std::vector<std::int64_t>& acc, Letter l) const;
};

}  // namespace rfrp::grp
