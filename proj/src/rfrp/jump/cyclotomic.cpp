#include "rfrp/jump/cyclotomic.hpp"

#include <algorithm>

#include "rfrp/errors.hpp"
#include "rfrp/linalg/abelian.hpp"

namespace rfrp::jump {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }

u64 powmod(u64 a, u64 e, u64 q) {
  u64 r = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> f;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int m) {
  if (m < 1) throw InputError("cyclotomic polynomial: order must be positive");
  std::vector<std::int64_t> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

u64 euler_phi(u64 m) {
  u64 r = m;
  for (u64 f : prime_factors(m)) r = r / f * (f - 1);
  return r;
}

std::vector<u64> primes_one_mod(u64 m, std::size_t count) {
  std::vector<u64> out;
  u64 q = (u64{1} << 30) / m * m + 1;
  while (out.size() < count && q > m) {
    if (linalg::is_prime(q)) out.push_back(q);
    q -= m;
  }
  if (out.size() < count) throw ResourceLimit("no primes congruent to 1 mod " + std::to_string(m) + " below 2^30");
  return out;
}

u64 primitive_root_of_unity(u64 m, u64 q) {
  if ((q - 1) % m != 0) throw InputError("primitive root: q is not 1 mod m");
  const auto fs = prime_factors(m);
  for (u64 a = 2; a < q; ++a) {
    const u64 w = powmod(a, (q - 1) / m, q);
    bool primitive = true;
    for (u64 f : fs) primitive = primitive && powmod(w, m / f, q) != 1;
    if (primitive) return w;
  }
  throw Error("primitive root: none found");
}

std::size_t rank_mod_q(const std::vector<std::vector<CycloElement>>& m, u64 q, u64 omega) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<u64>> a(rows, std::vector<u64>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      u64 v = 0, w = 1;
      for (std::int64_t c : m[i][j]) {
        const u64 cm = static_cast<u64>(((c % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) % static_cast<std::int64_t>(q));
        v = (v + mulmod(cm, w, q)) % q;
        w = mulmod(w, omega, q);
      }
      a[i][j] = v;
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const u64 inv = powmod(a[rank][c], q - 2, q);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const u64 f = mulmod(a[r][c], inv, q);
      for (std::size_t k = c; k < cols; ++k) a[r][k] = (a[r][k] + q - mulmod(f, a[rank][k], q)) % q;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const std::vector<std::vector<CycloElement>>& m, int order) {
  if (m.empty()) return 0;
  const auto phi = cyclotomic_polynomial(order);
  const std::size_t d = phi.size() - 1;
  // Companion matrix of Phi_m acting on coefficient vectors.
  linalg::IntMatrix zeta(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) zeta(i + 1, i) = 1;
  for (std::size_t i = 0; i < d; ++i) zeta(i, d - 1) = -phi[i];
  std::vector<linalg::IntMatrix> powers{linalg::IntMatrix::identity(d)};
  for (int k = 1; k < order; ++k) powers.push_back(powers.back() * zeta);
  const std::size_t rows = m.size(), cols = m[0].size();
  linalg::IntMatrix big(rows * d, cols * d);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < m[i][j].size(); ++k) {
        if (m[i][j][k] == 0) continue;
        const auto& pk = powers[k % static_cast<std::size_t>(order)];
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            if (pk(a, b) != 0) big(i * d + a, j * d + b) += pk(a, b) * linalg::BigInt(static_cast<long>(m[i][j][k]));
      }
  const std::size_t r = linalg::rank(big);
  if (r % d != 0) throw OracleMismatch("exact cyclotomic rank is not a multiple of phi(m)");
  return r / d;
}

}  // namespace rfrp::jump
