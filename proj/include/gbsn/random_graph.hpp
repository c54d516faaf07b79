#pragma once

#include <cstdint>
#include <random>

#include "gbsn/graph.hpp"

namespace gbsn {

struct GraphGenOptions {
  int min_rank = 1;
  int max_rank = 3;
  int max_vertices = 3;
  int max_extra_pairs = 2;  // edge pairs beyond the connecting tree
  long entry_bound = 3;     // matrix entries drawn from [-bound, bound]
};

// Random valid GLM graph of groups: a random spanning structure plus a few
// extra pairs, inclusion matrices redrawn until nonsingular.  Deterministic
// for a given engine state (range mapping avoids std::uniform_int_distribution,
// whose output is implementation-defined).
GLMGraph random_graph(std::mt19937_64& rng, const GraphGenOptions& opts = {});

// Random integer matrix with entries in [-bound, bound] and det != 0.
MatZ random_invertible_matz(std::mt19937_64& rng, int n, long bound);

// Random unimodular integer matrix: a product of elementary column
// operations, so |det| = 1 by construction.
MatZ random_unimodular(std::mt19937_64& rng, int n, int ops);

long rand_range(std::mt19937_64& rng, long lo, long hi);  // inclusive

}  // namespace gbsn
