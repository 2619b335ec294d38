#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rfrp/grp/presentation.hpp"

namespace rfrp::grp {

// Permutation of {0..n-1}; products act on the right: i (a b) = (i a) b.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(std::size_t degree);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
Perm perm_eval(const Word& w, const std::vector<Perm>& images, std::size_t degree);
// Elements of the subgroup generated by gens.
std::vector<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t degree);

struct PermGroup {
  std::string name;
  std::size_t degree = 0;
  std::vector<Perm> elements;  // sorted
  std::vector<Perm> class_reps;
};

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup dihedral_group(int n);  // order 2n, acting on the n-gon

// S3, D4..D12, A4, S4, then A5 (the only perfect target).
const std::vector<PermGroup>& quotient_sweep_targets();

struct QuotientWitness {
  std::string target;
  std::size_t degree = 0;
  std::vector<Perm> images;  // one per generator
  std::size_t image_order = 0;
};

// A homomorphism to `target` with nonabelian image, or nullopt when none exists.
// Throws ResourceLimit when the backtracking search exceeds node_budget.
std::optional<QuotientWitness> find_nonabelian_quotient(const Presentation& g, const PermGroup& target,
                                                        std::size_t node_budget = 50'000'000);
std::optional<QuotientWitness> sweep_nonabelian_quotients(const Presentation& g);

// Relators map to the identity and the image is nonabelian; recomputes image_order.
bool verify_witness(const Presentation& g, const QuotientWitness& w, std::string* why = nullptr);

nlohmann::json witness_to_json(const QuotientWitness& w);
QuotientWitness witness_from_json(const nlohmann::json& j);

}  // namespace rfrp::grp
