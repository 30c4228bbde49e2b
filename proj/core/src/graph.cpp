#include "mvc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mvc {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0) {
    throw std::invalid_argument("Graph: vertex count must be non-negative");
  }
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("Graph: endpoint out of range in edge (" +
                                  std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(g.edges_.size() * 2);
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted lexicographically, so each adjacency list fills in
  // ascending order: first the smaller endpoints, then the larger ones.
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  return g;
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("Graph::neighbors: vertex " + std::to_string(v));
  }
  return {adjacency_.data() + offsets_[v],
          static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("Graph::degree: vertex " + std::to_string(v));
  }
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  auto adj = neighbors(u);
  if (v < 0 || v >= n_) {
    throw std::out_of_range("Graph::has_edge: vertex " + std::to_string(v));
  }
  return std::binary_search(adj.begin(), adj.end(), v);
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  const long long total = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(total - g.edge_count()));
  for (int u = 0; u < n; ++u) {
    auto adj = g.neighbors(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), u + 1);
    for (int v = u + 1; v < n; ++v) {
      if (it != adj.end() && *it == v) {
        ++it;
        continue;
      }
      edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace mvc
