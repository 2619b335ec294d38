#pragma once

#include <cstdint>
#include <vector>

#include "rfrp/linalg/int_matrix.hpp"

namespace rfrp::jump {

// Element of Z[zeta_m] as coefficients of zeta^0..zeta^{m-1} (not reduced mod Phi_m).
using CycloElement = std::vector<std::int64_t>;

// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(int m);

std::uint64_t euler_phi(std::uint64_t m);

// Primes q = 1 (mod m) searched downward from 2^30.
std::vector<std::uint64_t> primes_one_mod(std::uint64_t m, std::size_t count);

// A primitive m-th root of unity in F_q (q = 1 mod m).
std::uint64_t primitive_root_of_unity(std::uint64_t m, std::uint64_t q);

// Rank over F_q of a matrix of cyclotomic entries with zeta -> omega.
std::size_t rank_mod_q(const std::vector<std::vector<CycloElement>>& m, std::uint64_t q, std::uint64_t omega);

// Exact rank over Q(zeta_m): each entry becomes its phi(m) x phi(m) multiplication
// matrix over Z and the integer rank is divided by phi(m).
std::size_t rank_exact(const std::vector<std::vector<CycloElement>>& m, int order);

}  // namespace rfrp::jump
