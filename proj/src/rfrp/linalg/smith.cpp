#include "rfrp/linalg/smith.hpp"

#include <algorithm>
#include <optional>

namespace rfrp::linalg {
namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Works on a copy of the input and mirrors every elementary operation into
// the transforms when they are tracked.
class Reducer {
 public:
  Reducer(const IntMatrix& a, bool track, bool left = true) : a_(a), track_(track), left_(track && left) {
    if (track_) {
      if (left_) u_ = IntMatrix::identity(a.rows());
      v_ = IntMatrix::identity(a.cols());
      vinv_ = IntMatrix::identity(a.cols());
    }
  }

  void run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!bring_min_to_pivot(t, t, a_.rows(), a_.cols())) break;
      reduce_at(t);
      if (a_(t, t) < 0) neg_row(t);
    }
  }

  std::vector<BigInt> diagonal() const {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    std::vector<BigInt> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a_(i, i);
    return d;
  }

  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }
  IntMatrix& vinv() { return vinv_; }

 private:
  void swap_row(std::size_t i, std::size_t j) {
    if (i == j) return;
    a_.swap_rows(i, j);
    if (left_) u_.swap_rows(i, j);
  }
  void swap_col(std::size_t i, std::size_t j) {
    if (i == j) return;
    a_.swap_cols(i, j);
    if (track_) {
      v_.swap_cols(i, j);
      vinv_.swap_rows(i, j);
    }
  }
  void neg_row(std::size_t i) {
    a_.negate_row(i);
    if (left_) u_.negate_row(i);
  }
  // row[dst] += k row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    a_.add_row_multiple(dst, src, k);
    if (left_) u_.add_row_multiple(dst, src, k);
  }
  // col[dst] += k col[src]; v <- v E, v^{-1} <- E^{-1} v^{-1}
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    a_.add_col_multiple(dst, src, k);
    if (track_) {
      v_.add_col_multiple(dst, src, k);
      vinv_.add_row_multiple(src, dst, -k);
    }
  }

  // Moves the smallest nonzero entry of the block [r0.., c0..) to (r0, c0).
  bool bring_min_to_pivot(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) {
        const BigInt& x = a_(i, j);
        if (x == 0) continue;
        if (!best || cmpabs(x, a_(best->first, best->second)) < 0) {
          best = {i, j};
          if (x == 1 || x == -1) goto found;
        }
      }
  found:
    if (!best) return false;
    swap_row(r0, best->first);
    swap_col(c0, best->second);
    return true;
  }

  // Nearest-integer quotient keeps remainders at most half the pivot.
  static BigInt nearest_quotient(const BigInt& x, const BigInt& p) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    BigInt twice = 2 * r;
    if (cmpabs(twice, p) > 0) q += 1;
    return q;
  }

  void reduce_at(std::size_t t) {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a_(i, t) == 0) continue;
        BigInt q = nearest_quotient(a_(i, t), a_(t, t));
        add_row(i, t, -q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a_(t, j) == 0) continue;
        BigInt q = nearest_quotient(a_(t, j), a_(t, t));
        add_col(j, t, -q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder now sits in row t or column t.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a_(i, t) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a_(t, j) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0) bi = t, bj = j;
        swap_row(t, bi);
        swap_col(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a_(i, j) == 0) continue;
          if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
        }
      if (divisible) return;
    }
  }

  IntMatrix a_;
  bool track_;
  bool left_;
  IntMatrix u_, v_, vinv_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  Reducer r(a, true);
  r.run();
  return SmithForm{r.diagonal(), std::move(r.u()), std::move(r.v()), std::move(r.vinv())};
}

SmithForm smith_normal_form_right(const IntMatrix& a) {
  Reducer r(a, true, false);
  r.run();
  return SmithForm{r.diagonal(), IntMatrix(), std::move(r.v()), std::move(r.vinv())};
}

std::vector<BigInt> smith_diagonal(const IntMatrix& a) {
  Reducer r(a, false);
  r.run();
  return r.diagonal();
}

}  // namespace rfrp::linalg
