#include "gbsn/tree_ball.hpp"

#include "gbsn/errors.hpp"

namespace gbsn {

namespace {

Int tree_degree(const GLMGraph& g, int type) {
  Int deg(0);
  for (OrientedEdge e : g.oriented_edges())
    if (g.initial(e) == type) deg += abs_int(g.inclusion(e).det());
  return deg;
}

}  // namespace

TreeBall tree_ball(const GLMGraph& g, int center_type, int radius, long long vertex_cap) {
  if (radius < 0) throw Error("tree_ball: negative radius");
  const Int cap{static_cast<long>(vertex_cap)};
  TreeBall ball;
  ball.radius = radius;
  ball.vertices.push_back({center_type, 0, tree_degree(g, center_type), -1, OrientedEdge{}});

  // per-coset expansion level by level
  for (size_t cur = 0; cur < ball.vertices.size(); ++cur) {
    // copy: vertices may reallocate while children are appended
    const TreeBallVertex parent = ball.vertices[cur];
    if (parent.depth == radius) continue;
    bool skipped_return_edge = false;
    for (OrientedEdge e : g.oriented_edges()) {
      if (g.initial(e) != parent.type) continue;
      Int count = abs_int(g.inclusion(e).det());
      // one incident edge of the reversed type leads back to the parent
      if (parent.parent >= 0 && !skipped_return_edge && e == parent.via.reverse()) {
        count -= 1;
        skipped_return_edge = true;
      }
      if (count > cap)
        throw CapExceeded("tree ball at radius " + std::to_string(radius),
                          static_cast<long long>(ball.vertices.size()));
      for (Int c(0); c < count; ++c) {
        if (static_cast<long long>(ball.vertices.size()) >= vertex_cap)
          throw CapExceeded("tree ball at radius " + std::to_string(radius),
                            static_cast<long long>(ball.vertices.size()));
        ball.vertices.push_back({g.terminal(e), parent.depth + 1,
                                 tree_degree(g, g.terminal(e)), int(cur), e});
        ball.edges.emplace_back(int(cur), int(ball.vertices.size()) - 1);
      }
    }
  }
  return ball;
}

}  // namespace gbsn
