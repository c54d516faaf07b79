#include "gbsn/sym_space.hpp"

#include "gbsn/errors.hpp"

namespace gbsn {

int sym_dim(int n) { return n * (n + 1) / 2; }

int sym_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

std::vector<SymQ> solve_linear_subspace(int n, const std::vector<SymConstraint>& constraints) {
  const int nvars = sym_dim(n);
  std::vector<SymConstraint> rows;
  for (const SymConstraint& c : constraints) {
    if (int(c.size()) != nvars) throw DimError("constraint of wrong length");
    rows.push_back(c);
  }

  // reduced row echelon form, pivoting column by column in lex order
  std::vector<int> pivot_col;
  size_t lead = 0;
  for (int col = 0; col < nvars && lead < rows.size(); ++col) {
    size_t sel = lead;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    Rat piv = rows[lead][col];
    for (int j = 0; j < nvars; ++j) rows[lead][j] /= piv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (int j = 0; j < nvars; ++j) rows[r][j] -= f * rows[lead][j];
    }
    pivot_col.push_back(col);
    ++lead;
  }

  std::vector<bool> is_pivot(nvars, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<SymQ> basis;
  for (int f = 0; f < nvars; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(nvars, Rat(0));
    x[f] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -rows[r][f];
    MatQ s(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        s.at(i, j) = x[sym_index(n, i, j)];
        s.at(j, i) = s.at(i, j);
      }
    basis.push_back(SymQ(std::move(s)));
  }
  return basis;
}

std::vector<SymConstraint> invariance_constraints(const MatQ& m) {
  const int n = m.dim();
  const int nvars = sym_dim(n);
  std::vector<SymConstraint> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      SymConstraint c(nvars, Rat(0));
      // (M^T S M)_ij = sum_{k,l} M_ki S_kl M_lj
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) c[sym_index(n, k, l)] += m.at(k, i) * m.at(l, j);
      c[sym_index(n, i, j)] -= 1;
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace gbsn
