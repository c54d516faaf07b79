#pragma once

#include <string>

#include "gbsn/matrix.hpp"

namespace gbsn {

// Full-rank Z-submodule of Q^n, stored as (1/denom) * column span of an
// integer basis in canonical Hermite normal form.  The denominator is
// minimal (coprime to the gcd of the basis entries), so two lattices are
// equal iff their stored fields are identical.
class Lattice {
 public:
  Lattice() : n_(0), denom_(1) {}

  // Z^n
  static Lattice standard(int n);
  // Lattice generated by the columns of an n x k rational matrix (given as
  // column vectors).  Throws RankError when the columns do not span Q^n.
  static Lattice from_columns(int n, const std::vector<VecQ>& cols);
  // Lattice spanned by the columns of a square rational matrix.
  static Lattice from_basis(const MatQ& basis);

  int dim() const { return n_; }
  const MatZ& basis() const { return basis_; }   // upper-triangular HNF
  const Int& denominator() const { return denom_; }

  // Basis as a rational matrix (columns are lattice generators).
  MatQ basis_q() const;

  bool operator==(const Lattice& rhs) const = default;

  bool contains(const VecQ& v) const;
  bool contains(const Lattice& other) const;

  std::string to_string() const;

 private:
  int n_;
  MatZ basis_;  // n x n, canonical HNF
  Int denom_;   // >= 1, minimal

  static Lattice from_integer_columns(int n, MatZ cols, Int denom);
};

// Smallest lattice containing both arguments.
Lattice lattice_sum(const Lattice& a, const Lattice& b);

// Largest lattice contained in both arguments (computed through duals).
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

// Image {A v : v in L}; throws SingularError when det(A) = 0.
Lattice lattice_image(const MatQ& a, const Lattice& l);

// Index [big : small]; throws ContainmentError when small is not a
// sublattice of big.
Int lattice_index(const Lattice& big, const Lattice& small);

// Dual lattice {y : <y, x> integral for all x in L}.
Lattice lattice_dual(const Lattice& l);

}  // namespace gbsn
