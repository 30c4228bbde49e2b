#pragma once

#include <cstdint>

#include "mvc/graph.hpp"

namespace mvc {

/// Complete graph K_k, k >= 1.
Graph complete_graph(int k);

/// Complete bipartite graph K(m,n): side L is 0..m-1, side R is m..m+n-1,
/// every cross pair is an edge. Both sides must be nonempty.
Graph complete_bipartite(int m, int n);

/// G(n,m): exactly m distinct edges drawn uniformly without replacement.
/// Identical (n, m, seed) always yields the same edge set.
Graph random_gnm(int n, long long m, std::uint64_t seed);

/// G(n,p): each pair included independently with probability p, pairs
/// visited in lexicographic order. Deterministic given the seed.
Graph random_gnp(int n, double p, std::uint64_t seed);

}  // namespace mvc
