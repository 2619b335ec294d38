#pragma once

#include <cstdint>
#include <vector>

#include "rfrp/grp/abelian_hom.hpp"
#include "rfrp/grp/presentation.hpp"
#include "rfrp/linalg/int_matrix.hpp"

namespace rfrp::linalg {

// Z^n / rowspan(R) written as Z/d_1 + ... + Z/d_t + Z^rank.
// Coordinates are ordered torsion first, then free.
struct AbelianStructure {
  std::size_t ambient = 0;
  std::size_t rank = 0;
  std::vector<BigInt> divisors;
  // ambient x coords: row j holds the coordinates of generator j (unreduced).
  IntMatrix projection;
  // coords x ambient: row k writes new basis vector k in the generators.
  IntMatrix basis_map;

  std::size_t torsion_count() const { return divisors.size(); }
  std::size_t coordinate_count() const { return divisors.size() + rank; }

  // Coordinates of an exponent vector, torsion entries reduced.
  std::vector<BigInt> coordinates(const std::vector<BigInt>& exponents) const;
  std::vector<BigInt> coordinates(const grp::Word& w) const;

  bool same_type(const AbelianStructure& o) const { return rank == o.rank && divisors == o.divisors; }
  bool trivial() const { return rank == 0 && divisors.empty(); }
};

AbelianStructure abelian_structure(const IntMatrix& relations);
AbelianStructure abelianization(const grp::Presentation& p);

// Exponent-sum vector of a word over n generators.
std::vector<BigInt> exponent_vector(const grp::Word& w, std::size_t n);

bool is_prime(std::uint64_t n);
// Returns the prime p with q = p^k, or 0 when q is not a prime power.
std::uint64_t prime_power_base(std::uint64_t q);

// G -> TF H1(G) -> TF H1(G) (x) Z/q, target (Z/q)^{b1}.
grp::AbelianHom tf_mod_q_hom(const grp::Presentation& p, std::uint64_t q);
grp::AbelianHom tf_mod_q_hom(const grp::Presentation& p, const AbelianStructure& h1, std::uint64_t q);

std::string describe(const AbelianStructure& a);  // e.g. "Z^2 + Z/3"

}  // namespace rfrp::linalg
