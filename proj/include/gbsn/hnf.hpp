#pragma once

#include "gbsn/matrix.hpp"

namespace gbsn {

// Column-style Hermite normal form.
//
// Convention: pivots are placed on the trailing columns so that a full-rank
// square input becomes upper triangular with positive diagonal, and in every
// pivot row the entries to the right of the pivot are reduced into
// [0, pivot).  Two integer matrices generate the same column lattice iff
// they have the same canonical form.
struct HnfResult {
  MatZ h;    // h = input * u
  MatZ u;    // unimodular (|det| = 1)
  int rank;  // number of pivots
};

HnfResult hnf(const MatZ& m);

// Canonical n x n basis of the column lattice of a full-row-rank n x k
// matrix (the trailing pivot block of hnf(m).h).  Throws RankError when the
// columns do not span Q^n.
MatZ hnf_basis(const MatZ& m);

}  // namespace gbsn
