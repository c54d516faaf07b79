#pragma once

#include <vector>

#include "gbsn/matrix.hpp"

namespace gbsn {

// Coordinates on Sym_n: the entries s_ij with i <= j, ordered
// lexicographically on (i, j).  sym_dim(n) = n(n+1)/2.
int sym_dim(int n);
int sym_index(int n, int i, int j);  // accepts i > j, symmetrizes

// One homogeneous linear equation over Sym_n, as its coefficient vector in
// the coordinates above.
using SymConstraint = std::vector<Rat>;

// Rational basis of the solution subspace {S in Sym_n : all constraints
// vanish}.  Elimination runs in the fixed lexicographic variable order, so
// the basis is deterministic.
std::vector<SymQ> solve_linear_subspace(int n, const std::vector<SymConstraint>& constraints);

// The n(n+1)/2 equations expressing M^T S M = S (upper triangle; the rest
// follows by symmetry).
std::vector<SymConstraint> invariance_constraints(const MatQ& m);

}  // namespace gbsn
