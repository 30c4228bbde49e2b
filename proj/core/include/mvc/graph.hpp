#pragma once

#include <compare>
#include <span>
#include <vector>

namespace mvc {

struct Edge {
  int u = 0;
  int v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph. Vertices are 0..n-1; edges are stored
/// normalized (u < v), sorted and deduplicated; adjacency lists are ascending.
/// Once constructed a Graph is safe to share across threads.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Endpoints are range-checked,
  /// self-loops rejected, (u,v)/(v,u) normalized, duplicates dropped.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;    // CSR offsets, size n_+1
  std::vector<int> adjacency_;  // concatenated neighbor lists
};

/// Same vertex set, exactly the non-edges of g.
Graph complement(const Graph& g);

}  // namespace mvc
