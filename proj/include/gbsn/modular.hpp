#pragma once

#include <string>
#include <vector>

#include "gbsn/graph.hpp"
#include "gbsn/presentation.hpp"

namespace gbsn {

// Element of AGL_n(Q): x |-> linear * x + translation.
struct AffineElement {
  VecQ translation;
  MatQ linear;

  static AffineElement identity(int n);
  // (t1, L1)(t2, L2) = (t1 + L1 t2, L1 L2)
  AffineElement compose(const AffineElement& rhs) const;
  AffineElement inverse() const;
  AffineElement power(long k) const;
  bool is_identity() const;
  bool operator==(const AffineElement&) const = default;
  std::string to_string() const;
};

// The modular homomorphism, presented by matrices: a base vertex, rational
// transport identifications P_w of each vertex group with the base one, and
// the image M_e of each stable letter.  Tree edges map to the identity, so
// the image is generated by the non-tree edge images.
struct ModularRep {
  int rank = 0;
  int base_vertex = -1;
  std::vector<MatQ> transport;        // per vertex: P_w (P_base = I)
  std::vector<MatQ> edge_image_fwd;   // per pair
  std::vector<MatQ> edge_image_rev;   // per pair, = inverse of fwd
  std::vector<int> nontree_pairs;

  const MatQ& image(OrientedEdge e) const {
    return e.reversed ? edge_image_rev[e.pair] : edge_image_fwd[e.pair];
  }
  // Generators of the image of the modular homomorphism.
  std::vector<MatQ> generators() const;
};

ModularRep modular_generators(const GLMGraph& g, const SpanningTree& t);

// The affine representation: vertex generators act by translations
// (P_w e_k, id), stable letters by (0, M_e).
struct AffineRep {
  int rank = 0;
  std::vector<MatQ> transport;  // per vertex
  std::vector<MatQ> stable;     // per pair

  AffineElement letter_image(const Letter& l) const;  // throws UnknownGenerator
};

AffineRep delta_affine(const GLMGraph& g, const SpanningTree& t);

// Left-to-right composition of letter images, exact.
AffineElement evaluate_word(const AffineRep& rep, const Word& w);

struct PresentationCheck {
  bool ok = true;
  std::string failed_relator;  // label of the first violated relator
  AffineElement value;         // its (non-identity) image
};

// Checks that every relator of the presentation maps to the identity.
PresentationCheck verify_presentation(const AffineRep& rep, const StandardPresentation& pres);

}  // namespace gbsn
