#include "gbsn/random_graph.hpp"

namespace gbsn {

long rand_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + long(rng() % std::uint64_t(hi - lo + 1));
}

MatZ random_invertible_matz(std::mt19937_64& rng, int n, long bound) {
  for (;;) {
    MatZ m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rand_range(rng, -bound, bound);
    if (m.det() != 0) return m;
  }
}

MatZ random_unimodular(std::mt19937_64& rng, int n, int ops) {
  MatZ m = MatZ::identity(n);
  if (n == 1) {
    if (rand_range(rng, 0, 1)) m.at(0, 0) = -1;
    return m;
  }
  for (int k = 0; k < ops; ++k) {
    int i = int(rand_range(rng, 0, n - 1));
    int j = int(rand_range(rng, 0, n - 1));
    if (i == j) {
      if (rand_range(rng, 0, 1)) m.negate_col(i);
      continue;
    }
    m.addmul_col(j, i, Int(rand_range(rng, -2, 2)));
  }
  return m;
}

GLMGraph random_graph(std::mt19937_64& rng, const GraphGenOptions& opts) {
  int n = int(rand_range(rng, opts.min_rank, opts.max_rank));
  int nv = int(rand_range(rng, 1, opts.max_vertices));
  std::vector<std::string> vertices;
  for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));

  std::vector<EdgePair> edges;
  int eid = 0;
  auto add_edge = [&](int from, int to) {
    EdgePair e;
    e.id = "e" + std::to_string(eid++);
    e.from = from;
    e.to = to;
    e.matrix_from = random_invertible_matz(rng, n, opts.entry_bound);
    e.matrix_to = random_invertible_matz(rng, n, opts.entry_bound);
    edges.push_back(std::move(e));
  };

  // connect each vertex to an earlier one, then sprinkle extras
  for (int v = 1; v < nv; ++v) add_edge(int(rand_range(rng, 0, v - 1)), v);
  int extra = int(rand_range(rng, nv == 1 ? 1 : 0, opts.max_extra_pairs));
  for (int k = 0; k < extra; ++k)
    add_edge(int(rand_range(rng, 0, nv - 1)), int(rand_range(rng, 0, nv - 1)));

  return GLMGraph(n, std::move(vertices), std::move(edges));
}

}  // namespace gbsn
