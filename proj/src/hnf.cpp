#include "gbsn/hnf.hpp"

#include "gbsn/errors.hpp"

namespace gbsn {

namespace {

// Truncated quotient, used while shrinking entries during gcd elimination.
Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const MatZ& m) {
  const int n = m.rows();
  const int k = m.cols();
  HnfResult r{m, MatZ::identity(k), 0};
  MatZ& h = r.h;
  MatZ& u = r.u;

  int t = k - 1;  // next pivot column
  for (int i = n - 1; i >= 0 && t >= 0; --i) {
    // gcd elimination across the active columns 0..t of row i
    for (;;) {
      int j0 = -1;
      for (int j = 0; j <= t; ++j) {
        if (h.at(i, j) == 0) continue;
        if (j0 < 0 || abs_int(h.at(i, j)) < abs_int(h.at(i, j0))) j0 = j;
      }
      if (j0 < 0) break;  // row is zero on the active columns
      bool lone = true;
      for (int j = 0; j <= t; ++j) {
        if (j == j0 || h.at(i, j) == 0) continue;
        lone = false;
        Int q = tdiv(h.at(i, j), h.at(i, j0));
        h.addmul_col(j, j0, -q);
        u.addmul_col(j, j0, -q);
      }
      if (lone) {
        h.swap_cols(j0, t);
        u.swap_cols(j0, t);
        break;
      }
    }
    if (h.at(i, t) == 0) continue;  // rank drops; keep t for the next row
    if (h.at(i, t) < 0) {
      h.negate_col(t);
      u.negate_col(t);
    }
    // canonical reduction of row i to the right of its pivot
    for (int c = t + 1; c < k; ++c) {
      Int q = floor_div(h.at(i, c), h.at(i, t));
      h.addmul_col(c, t, -q);
      u.addmul_col(c, t, -q);
    }
    --t;
    ++r.rank;
  }
  return r;
}

MatZ hnf_basis(const MatZ& m) {
  const int n = m.rows();
  HnfResult r = hnf(m);
  if (r.rank < n)
    throw RankError("columns span a rank-" + std::to_string(r.rank) +
                    " sublattice of Q^" + std::to_string(n));
  MatZ basis(n, n);
  const int off = m.cols() - n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis.at(i, j) = r.h.at(i, off + j);
  return basis;
}

}  // namespace gbsn
