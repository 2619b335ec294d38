#pragma once

#include <map>
#include <vector>

#include "rfrp/grp/presentation.hpp"
#include "rfrp/linalg/int_matrix.hpp"

namespace rfrp::grp {

// Element of Z[Z^b]: exponent vector -> coefficient, zero coefficients omitted.
using LaurentPoly = std::map<std::vector<long>, linalg::BigInt>;

struct FoxMatrix {
  std::size_t rows = 0;  // relators
  std::size_t cols = 0;  // generators
  std::size_t variables = 0;  // b1
  std::vector<LaurentPoly> entries;  // row-major

  const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Fox derivatives pushed to the group ring of TF H1.
FoxMatrix fox_jacobian(const Presentation& p);

// Sum of coefficients of each entry: the Jacobian at the trivial character.
linalg::IntMatrix augmentation(const FoxMatrix& m);

}  // namespace rfrp::grp
