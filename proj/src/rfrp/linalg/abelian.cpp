#include "rfrp/linalg/abelian.hpp"

#include <cstdlib>

#include "rfrp/errors.hpp"
#include "rfrp/linalg/smith.hpp"

namespace rfrp::linalg {

std::vector<BigInt> AbelianStructure::coordinates(const std::vector<BigInt>& exponents) const {
  if (exponents.size() != ambient) throw InputError("coordinates: wrong exponent vector length");
  std::vector<BigInt> c(coordinate_count());
  for (std::size_t j = 0; j < ambient; ++j) {
    if (exponents[j] == 0) continue;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (projection(j, k) != 0) mpz_addmul(c[k].get_mpz_t(), exponents[j].get_mpz_t(), projection(j, k).get_mpz_t());
  }
  for (std::size_t k = 0; k < divisors.size(); ++k) mpz_mod(c[k].get_mpz_t(), c[k].get_mpz_t(), divisors[k].get_mpz_t());
  return c;
}

std::vector<BigInt> AbelianStructure::coordinates(const grp::Word& w) const {
  return coordinates(exponent_vector(w, ambient));
}

std::vector<BigInt> exponent_vector(const grp::Word& w, std::size_t n) {
  std::vector<BigInt> e(n);
  for (grp::Letter l : w.letters()) {
    std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
    if (g >= n) throw InputError("exponent_vector: letter out of range");
    if (l > 0)
      ++e[g];
    else
      --e[g];
  }
  return e;
}

AbelianStructure abelian_structure(const IntMatrix& relations) {
  const std::size_t n = relations.cols();
  SmithForm s = smith_normal_form_right(relations);
  std::vector<std::size_t> torsion, free;
  for (std::size_t k = 0; k < n; ++k) {
    if (k < s.d.size() && s.d[k] != 0) {
      if (s.d[k] != 1) torsion.push_back(k);
    } else {
      free.push_back(k);
    }
  }
  AbelianStructure a;
  a.ambient = n;
  a.rank = free.size();
  std::vector<std::size_t> order = torsion;
  order.insert(order.end(), free.begin(), free.end());
  for (std::size_t k : torsion) a.divisors.push_back(s.d[k]);
  a.projection = IntMatrix(n, order.size());
  a.basis_map = IntMatrix(order.size(), n);
  for (std::size_t c = 0; c < order.size(); ++c)
    for (std::size_t j = 0; j < n; ++j) {
      a.projection(j, c) = s.v(j, order[c]);
      a.basis_map(c, j) = s.v_inverse(order[c], j);
    }
  return a;
}

AbelianStructure abelianization(const grp::Presentation& p) {
  return abelian_structure(grp::abelianized_relator_matrix(p));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t prime_power_base(std::uint64_t q) {
  if (q < 2) return 0;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1 ? p : 0;
}

grp::AbelianHom tf_mod_q_hom(const grp::Presentation& p, std::uint64_t q) {
  return tf_mod_q_hom(p, abelianization(p), q);
}

grp::AbelianHom tf_mod_q_hom(const grp::Presentation& p, const AbelianStructure& h1, std::uint64_t q) {
  if (prime_power_base(q) == 0) throw InputError("tf_mod_q_hom: " + std::to_string(q) + " is not a prime power");
  const std::size_t t = h1.torsion_count();
  std::vector<BigInt> moduli(h1.rank, BigInt(static_cast<unsigned long>(q)));
  std::vector<std::vector<BigInt>> images;
  for (std::size_t j = 0; j < static_cast<std::size_t>(p.n_generators()); ++j) {
    std::vector<BigInt> im(h1.rank);
    for (std::size_t k = 0; k < h1.rank; ++k) im[k] = h1.projection(j, t + k);
    images.push_back(std::move(im));
  }
  return grp::AbelianHom(p, std::move(moduli), std::move(images));
}

std::string describe(const AbelianStructure& a) {
  std::string s;
  if (a.rank > 0) s = a.rank == 1 ? "Z" : "Z^" + std::to_string(a.rank);
  for (const auto& d : a.divisors) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s.empty() ? "0" : s;
}

}  // namespace rfrp::linalg
