#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbsn/lattice.hpp"
#include "gbsn/matrix.hpp"
#include "gbsn/poly.hpp"
#include "gbsn/sym_space.hpp"

namespace gbsn {

// Finitely generated subgroup of GL_n(Q), by a list of invertible
// generators.  An empty list denotes the trivial group.
struct MatGroupGens {
  int n = 0;
  std::vector<MatQ> gens;

  MatGroupGens() = default;
  MatGroupGens(int dim, std::vector<MatQ> generators);  // validates
};

// Word in the generators and their inverses.
struct GenWord {
  std::vector<std::pair<int, int>> letters;  // (generator index, +-1)

  MatQ evaluate(const MatGroupGens& g) const;
  GenWord inverse() const;
  std::string to_string() const;  // e.g. "g0 g1^-1"
  bool empty() const { return letters.empty(); }
};

enum class InfiniteReason { NonUnitDeterminant, InfiniteOrderElement, ClosureCapExceeded };

std::string to_string(InfiniteReason r);

struct FinitenessResult {
  bool finite = false;
  // finite case
  Int order = 0;
  std::vector<MatQ> elements;  // the full closure, identity first
  // infinite case
  GenWord witness;
  InfiniteReason reason = InfiniteReason::InfiniteOrderElement;
};

// |GL_n(F_3)| = prod_{i<n} (3^n - 3^i); an upper bound for the order of any
// finite subgroup of GL_n(Q), since such a subgroup is conjugate into
// GL_n(Z) and reduction mod 3 is injective on it.
Int default_closure_cap(int n);

struct DecisionConfig {
  Int closure_cap = 0;  // 0: use default_closure_cap(n)
  int witness_depth = 2;
  int lattice_max_iters = 64;
  int lattice_denom_window = 8;
  int averaging_max_iters = 200;
  double averaging_tol = 1e-12;
  Int rational_denom_cap = 1000000;
};

// Exact finiteness decision: determinant and element-order pre-checks on
// short words, then breadth-first closure with exact equality.  Every
// element met during the closure is order-tested, so an infinite group is
// reported as soon as a non-torsion element appears; the cap is a backstop
// that stays sound because no finite subgroup can exceed it.
FinitenessResult decide_finite(const MatGroupGens& g, const DecisionConfig& cfg = {});

// Basis of {S in Sym_n : M^T S M = S for every generator M}.
std::vector<SymQ> invariant_form_space(const MatGroupGens& g);

struct FormCertificate {
  SymQ form;  // positive definite, invariant under every generator
};

struct LatticeCertificate {
  Lattice lattice;  // M L = L for every generator
};

enum class VerdictTag { Yes, No, Undecided };

std::string to_string(VerdictTag t);

using Diagnostics = std::map<std::string, std::string>;

struct OnVerdict {
  VerdictTag tag = VerdictTag::Undecided;
  std::optional<FormCertificate> certificate;  // Yes
  std::string no_reason;                       // No: machine-readable tag
  std::optional<GenWord> witness_word;         // No: element witness, when one exists
  std::optional<Poly> witness_poly;            // No: polynomial exhibiting the obstruction
  Diagnostics diagnostics;
};

// Is the group conjugate in GL_n(R) into O(n)?
//   Yes  - exact invariant positive definite form (always verifiable);
//   No   - exact obstruction: empty invariant-form space, an element with
//          an eigenvalue off the unit circle, a non-semisimple element, or
//          a one-dimensional form space with no definite element;
//   Undecided - the positive-definiteness search in a form space of
//          dimension >= 2 failed within the configured budget.
OnVerdict decide_conjugate_into_On(const MatGroupGens& g, const DecisionConfig& cfg = {},
                                   const FinitenessResult* finiteness_hint = nullptr);

struct LatticeVerdict {
  VerdictTag tag = VerdictTag::Undecided;
  std::optional<LatticeCertificate> certificate;  // Yes
  std::string no_reason;
  std::optional<GenWord> witness_word;
  std::optional<Poly> witness_poly;
  int iterations = 0;
  Diagnostics diagnostics;
};

// Is the group conjugate in GL_n(Q) into GL_n(Z)?  Exact No pre-checks
// (non-integral characteristic polynomial or non-unit determinant on short
// words), then the invariant-lattice fixpoint from Z^n.
LatticeVerdict decide_conjugate_into_GLnZ(const MatGroupGens& g, const DecisionConfig& cfg = {});

// Intersection of A(Z^n) over all elements of a finite group; invariant
// under the group.  Throws NotAGroup when the element list is not closed
// under multiplication.
Lattice finite_group_invariant_lattice(const std::vector<MatQ>& closure);

bool verify_certificate(const MatGroupGens& g, const FormCertificate& cert);
bool verify_certificate(const MatGroupGens& g, const LatticeCertificate& cert);

// Words of length 1..depth over the generators and inverses, without
// immediate cancellations; deterministic order.
std::vector<GenWord> short_words(int num_gens, int depth);

}  // namespace gbsn
