#pragma once

#include <vector>

#include "gbsn/graph.hpp"

namespace gbsn {

struct TreeBallVertex {
  int type;           // vertex of the quotient graph
  int depth;
  Int degree;         // full degree in the Bass-Serre tree
  int parent;         // index into TreeBall::vertices, -1 for the center
  OrientedEdge via;   // oriented edge type parent -> this (valid when parent >= 0)
};

// Finite ball in the Bass-Serre tree.  Vertices of type w carry, for each
// oriented edge e with i(e) = w, exactly |det A_e| incident edges of type e
// (one per coset of the edge group image).
struct TreeBall {
  int radius = 0;
  std::vector<TreeBallVertex> vertices;      // BFS order, center first
  std::vector<std::pair<int, int>> edges;    // (parent, child)
};

// Ball of the given radius around a base vertex of type `center_type`.
// Throws CapExceeded (with the partial vertex count) when the ball would
// contain more than `vertex_cap` vertices.
TreeBall tree_ball(const GLMGraph& g, int center_type, int radius, long long vertex_cap);

}  // namespace gbsn
