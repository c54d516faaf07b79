#pragma once

#include <string>
#include <vector>

#include "gbsn/graph.hpp"

namespace gbsn {

// Generator of the standard presentation: either coordinate k of a vertex
// group or the stable letter of an edge pair (the reversed letter is the
// formal inverse).
struct GenRef {
  enum class Kind { Vertex, Stable };
  Kind kind = Kind::Vertex;
  int vertex = -1;  // Kind::Vertex
  int coord = -1;   // Kind::Vertex
  int pair = -1;    // Kind::Stable

  static GenRef vertex_gen(int v, int k) { return {Kind::Vertex, v, k, -1}; }
  static GenRef stable(int p) { return {Kind::Stable, -1, -1, p}; }
  bool operator==(const GenRef&) const = default;
};

struct Letter {
  GenRef gen;
  long exp = 1;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word word_inverse(const Word& w);

struct Relator {
  Word word;
  std::string label;
};

struct StandardPresentation {
  int rank = 0;
  std::vector<std::string> vertex_names;
  std::vector<std::string> pair_ids;
  std::vector<Relator> relators;

  std::string letter_name(const Letter& l) const;
  std::string word_name(const Word& w) const;
};

// Standard presentation of pi_1 of the graph of groups with respect to a
// spanning tree: edge relators t_e i_e(x) t_e^{-1} i_ebar(x)^{-1} for both
// orientations and each basis vector x, the pair relators t_e t_ebar, the
// tree relators t_e, and the vertex commutators.
StandardPresentation standard_presentation(const GLMGraph& g, const SpanningTree& t);

}  // namespace gbsn
