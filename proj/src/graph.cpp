#include "gbsn/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gbsn/errors.hpp"

namespace gbsn {

GLMGraph::GLMGraph(int rank, std::vector<std::string> vertices, std::vector<EdgePair> edges)
    : rank_(rank), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (rank_ < 1) throw ValidationError("rank must be at least 1");
  if (vertices_.empty()) throw ValidationError("graph has no vertices");

  std::set<std::string> vnames;
  for (const std::string& v : vertices_)
    if (!vnames.insert(v).second) throw ValidationError("duplicate vertex id '" + v + "'");

  std::set<std::string> enames;
  for (const EdgePair& e : edges_) {
    if (!enames.insert(e.id).second) throw ValidationError("duplicate edge id '" + e.id + "'");
    if (e.from < 0 || e.from >= num_vertices() || e.to < 0 || e.to >= num_vertices())
      throw ValidationError("edge '" + e.id + "' has an unknown endpoint");
    for (const auto* side : {&e.matrix_from, &e.matrix_to}) {
      if (side->rows() != rank_ || side->cols() != rank_)
        throw ValidationError("edge '" + e.id + "': inclusion matrix is not " +
                              std::to_string(rank_) + "x" + std::to_string(rank_));
    }
    if (e.matrix_from.det() == 0)
      throw ValidationError("edge '" + e.id + "': matrix_from is singular");
    if (e.matrix_to.det() == 0)
      throw ValidationError("edge '" + e.id + "': matrix_to is singular");
  }

  // connectivity
  std::vector<bool> seen(vertices_.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const EdgePair& e : edges_)
      for (int w : {e.from, e.to})
        if ((e.from == v || e.to == v) && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
  }
  for (size_t v = 0; v < vertices_.size(); ++v)
    if (!seen[v]) throw ValidationError("graph is disconnected: vertex '" + vertices_[v] +
                                        "' is not reachable from '" + vertices_[0] + "'");
}

int GLMGraph::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return int(i);
  return -1;
}

std::vector<OrientedEdge> GLMGraph::oriented_edges() const {
  std::vector<OrientedEdge> out;
  out.reserve(2 * edges_.size());
  for (int p = 0; p < num_edge_pairs(); ++p) {
    out.push_back({p, false});
    out.push_back({p, true});
  }
  return out;
}

bool SpanningTree::in_tree(int pair) const {
  return std::find(tree_pairs.begin(), tree_pairs.end(), pair) != tree_pairs.end();
}

SpanningTree spanning_tree(const GLMGraph& g) {
  int root = 0;
  for (int v = 1; v < g.num_vertices(); ++v)
    if (g.vertex_name(v) < g.vertex_name(root)) root = v;

  SpanningTree t;
  t.root = root;
  t.edge_to.assign(g.num_vertices(), OrientedEdge{});
  t.parent.assign(g.num_vertices(), -1);

  std::vector<bool> seen(g.num_vertices(), false);
  std::deque<int> queue{root};
  seen[root] = true;
  t.bfs_order.push_back(root);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int p = 0; p < g.num_edge_pairs(); ++p) {
      for (bool rev : {false, true}) {
        OrientedEdge e{p, rev};
        if (g.initial(e) != v) continue;
        int w = g.terminal(e);
        if (seen[w]) continue;
        seen[w] = true;
        t.tree_pairs.push_back(p);
        t.edge_to[w] = e;
        t.parent[w] = v;
        t.bfs_order.push_back(w);
        queue.push_back(w);
      }
    }
  }
  return t;
}

EdgeClass classify_edge(const GLMGraph& g, OrientedEdge e) {
  bool asc = abs_int(g.inclusion(e).det()) == 1;
  bool rev_asc = abs_int(g.inclusion(e.reverse()).det()) == 1;
  return {asc, asc && !rev_asc};
}

GLMGraph collapse_move(const GLMGraph& g, OrientedEdge e) {
  if (g.is_loop(e))
    throw CollapseError("edge '" + g.edge(e.pair).id + "' is a loop");
  if (!classify_edge(g, e).ascending)
    throw CollapseError("edge '" + g.edge(e.pair).id +
                        "' is not ascending at its initial vertex");

  const int v = g.initial(e);   // vertex being deleted
  const int w = g.terminal(e);  // surviving vertex
  // A_ebar * A_e^{-1}: integral because A_e is unimodular
  MatQ d_q = MatQ::from_int(g.inclusion(e.reverse())) * MatQ::from_int(g.inclusion(e)).inverse();
  MatZ d = d_q.to_int();

  std::vector<std::string> vertices;
  std::vector<int> remap(g.num_vertices(), -1);
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (u == v) continue;
    remap[u] = int(vertices.size());
    vertices.push_back(g.vertex_name(u));
  }
  remap[v] = remap[w];

  std::vector<EdgePair> edges;
  for (int p = 0; p < g.num_edge_pairs(); ++p) {
    if (p == e.pair) continue;
    EdgePair ep = g.edge(p);
    if (ep.from == v) ep.matrix_from = d * ep.matrix_from;
    if (ep.to == v) ep.matrix_to = d * ep.matrix_to;
    ep.from = remap[ep.from];
    ep.to = remap[ep.to];
    edges.push_back(std::move(ep));
  }
  return GLMGraph(g.rank(), std::move(vertices), std::move(edges));
}

GLMGraph reduce(const GLMGraph& g) {
  GLMGraph cur = g;
  for (;;) {
    bool moved = false;
    for (int p = 0; p < cur.num_edge_pairs() && !moved; ++p)
      for (bool rev : {false, true}) {
        OrientedEdge e{p, rev};
        if (cur.is_loop(e) || !classify_edge(cur, e).ascending) continue;
        cur = collapse_move(cur, e);
        moved = true;
        break;
      }
    if (!moved) return cur;
  }
}

}  // namespace gbsn
