#include "rfrp/grp/fox.hpp"

#include <cstdlib>

#include "rfrp/linalg/abelian.hpp"

namespace rfrp::grp {

FoxMatrix fox_jacobian(const Presentation& p) {
  const auto h1 = linalg::abelianization(p);
  const std::size_t n = static_cast<std::size_t>(p.n_generators());
  const std::size_t b = h1.rank, t = h1.torsion_count();
  std::vector<std::vector<long>> gen_exp(n, std::vector<long>(b));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < b; ++k) gen_exp[j][k] = h1.projection(j, t + k).get_si();

  FoxMatrix m;
  m.rows = p.relators().size();
  m.cols = n;
  m.variables = b;
  m.entries.resize(m.rows * m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::vector<long> prefix(b, 0);
    for (Letter l : p.relators()[r].letters()) {
      std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
      auto& entry = m.entries[r * n + g];
      if (l > 0) {
        // d(u x)/dx = u
        entry[prefix] += 1;
        for (std::size_t k = 0; k < b; ++k) prefix[k] += gen_exp[g][k];
      } else {
        // d(u x^-1)/dx = -u x^-1
        for (std::size_t k = 0; k < b; ++k) prefix[k] -= gen_exp[g][k];
        entry[prefix] -= 1;
      }
    }
  }
  for (auto& e : m.entries)
    for (auto it = e.begin(); it != e.end();) it = it->second == 0 ? e.erase(it) : std::next(it);
  return m;
}

linalg::IntMatrix augmentation(const FoxMatrix& m) {
  linalg::IntMatrix out(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      for (const auto& [e, coeff] : m.at(r, c)) out(r, c) += coeff;
  return out;
}

}  // namespace rfrp::grp
