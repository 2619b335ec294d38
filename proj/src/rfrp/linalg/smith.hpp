#pragma once

#include <cstddef>
#include <vector>

#include "rfrp/linalg/int_matrix.hpp"

namespace rfrp::linalg {

// u * a * v = diag(d), with d a divisibility chain (zeros last).
struct SmithForm {
  std::vector<BigInt> d;  // length min(rows, cols)
  IntMatrix u;            // rows x rows
  IntMatrix v;            // cols x cols
  IntMatrix v_inverse;    // cols x cols
};

SmithForm smith_normal_form(const IntMatrix& a);

// Tracks only v and v^{-1}; u is left empty. Enough for abelian group coordinates.
SmithForm smith_normal_form_right(const IntMatrix& a);

// Only the diagonal; skips the transform bookkeeping.
std::vector<BigInt> smith_diagonal(const IntMatrix& a);

}  // namespace rfrp::linalg
