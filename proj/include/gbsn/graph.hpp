#pragma once

#include <string>
#include <vector>

#include "gbsn/matrix.hpp"

namespace gbsn {

// Undirected edge of a GLM graph of groups, stored once with both
// inclusion matrices.  matrix_from is the inclusion of the edge group into
// the group at `from`, matrix_to the inclusion into the group at `to`.
struct EdgePair {
  std::string id;
  int from = -1;
  int to = -1;
  MatZ matrix_from;
  MatZ matrix_to;

  bool operator==(const EdgePair&) const = default;
};

// Oriented edge: an edge pair together with a direction.  The forward
// orientation runs from `from` to `to`.
struct OrientedEdge {
  int pair = -1;
  bool reversed = false;

  OrientedEdge reverse() const { return {pair, !reversed}; }
  bool operator==(const OrientedEdge&) const = default;
};

// Finite connected graph with all vertex and edge groups Z^n and injective
// inclusions given by integer matrices with nonzero determinant.
class GLMGraph {
 public:
  GLMGraph(int rank, std::vector<std::string> vertices, std::vector<EdgePair> edges);

  int rank() const { return rank_; }
  int num_vertices() const { return int(vertices_.size()); }
  int num_edge_pairs() const { return int(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<EdgePair>& edges() const { return edges_; }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const EdgePair& edge(int pair) const { return edges_[pair]; }
  int vertex_index(const std::string& name) const;  // -1 when absent

  int initial(OrientedEdge e) const { return e.reversed ? edges_[e.pair].to : edges_[e.pair].from; }
  int terminal(OrientedEdge e) const { return initial(e.reverse()); }
  // Inclusion matrix at the initial vertex of e.
  const MatZ& inclusion(OrientedEdge e) const {
    return e.reversed ? edges_[e.pair].matrix_to : edges_[e.pair].matrix_from;
  }
  bool is_loop(OrientedEdge e) const { return initial(e) == terminal(e); }

  // All oriented edges, pairs in listed order, forward before reversed.
  std::vector<OrientedEdge> oriented_edges() const;

  bool operator==(const GLMGraph&) const = default;

 private:
  int rank_;
  std::vector<std::string> vertices_;
  std::vector<EdgePair> edges_;
};

// Maximal subtree rooted at the lexicographically least vertex id,
// discovered breadth-first with edge pairs tried in listed order.
struct SpanningTree {
  int root = -1;
  std::vector<int> tree_pairs;          // pair indices in the tree
  std::vector<OrientedEdge> edge_to;    // per vertex: oriented edge parent -> vertex
  std::vector<int> parent;              // per vertex: parent vertex (-1 for root)
  std::vector<int> bfs_order;           // discovery order

  bool in_tree(int pair) const;
};

SpanningTree spanning_tree(const GLMGraph& g);

struct EdgeClass {
  bool ascending;
  bool strictly_ascending;
};

// ascending <=> the inclusion at the initial vertex is onto (|det| = 1).
EdgeClass classify_edge(const GLMGraph& g, OrientedEdge e);

// Collapse of a non-loop ascending edge: deletes the pair and the initial
// vertex, re-attaching every other incident edge end f via
// A'_f = A_ebar * A_e^{-1} * A_f.  Throws CollapseError when e is a loop or
// not ascending.
GLMGraph collapse_move(const GLMGraph& g, OrientedEdge e);

// Applies collapse moves in deterministic scan order (pair order, forward
// orientation first) until every ascending edge is a loop.
GLMGraph reduce(const GLMGraph& g);

}  // namespace gbsn
