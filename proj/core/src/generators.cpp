#include "mvc/generators.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "mvc/rng.hpp"

namespace mvc {

Graph complete_graph(int k) {
  if (k < 1) {
    throw std::invalid_argument("complete_graph: k must be at least 1");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(k, std::move(edges));
}

Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("complete_bipartite: both sides must be nonempty");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * n);
  for (int u = 0; u < m; ++u) {
    for (int v = m; v < m + n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(m + n, std::move(edges));
}

namespace {

// Distinct unordered pairs on n vertices by rejection sampling; uniform and
// deterministic given the stream.
std::unordered_set<std::uint64_t> sample_pairs(int n, long long count, SplitMix64& rng) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(count) * 2);
  while (static_cast<long long>(chosen.size()) < count) {
    const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    const int a = u < v ? u : v;
    const int b = u < v ? v : u;
    chosen.insert(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) + b);
  }
  return chosen;
}

}  // namespace

Graph random_gnm(int n, long long m, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_gnm: n must be at least 1");
  }
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_m) {
    throw std::invalid_argument("random_gnm: m out of range [0, n(n-1)/2]");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  if (m <= max_m / 2) {
    auto chosen = sample_pairs(n, m, rng);
    for (std::uint64_t key : chosen) {
      edges.push_back({static_cast<int>(key / n), static_cast<int>(key % n)});
    }
  } else {
    // Dense case: sample the excluded pairs instead.
    auto excluded = sample_pairs(n, max_m - m, rng);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const std::uint64_t key =
            static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v;
        if (!excluded.contains(key)) edges.push_back({u, v});
      }
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_gnp: n must be at least 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {  // also rejects NaN
    throw std::invalid_argument("random_gnp: p must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit_real() < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace mvc
