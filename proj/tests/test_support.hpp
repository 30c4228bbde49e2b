#pragma once

// Shared helpers for the test suites. naive_min_cover_size is a deliberately
// simple subset scan, written independently of the library's solvers so it
// can vouch for them.

#include <bit>
#include <cstdint>
#include <vector>

#include "mvc/generators.hpp"
#include "mvc/graph.hpp"

namespace testsupport {

inline int naive_min_cover_size(const mvc::Graph& g) {
  const int n = g.vertex_count();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) >= best) continue;
    bool covers = true;
    for (const mvc::Edge& e : g.edges()) {
      if (!(mask & (1u << e.u)) && !(mask & (1u << e.v))) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::popcount(mask);
  }
  return best;
}

inline mvc::Graph path_graph(int n) {
  std::vector<mvc::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return mvc::Graph::from_edges(n, std::move(edges));
}

inline mvc::Graph cycle_graph(int n) {
  std::vector<mvc::Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return mvc::Graph::from_edges(n, std::move(edges));
}

inline mvc::Graph petersen_graph() {
  std::vector<mvc::Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer cycle
    edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    edges.push_back({i, 5 + i});                // spokes
  }
  return mvc::Graph::from_edges(10, std::move(edges));
}

// The deterministic test corpus: n cycles through [4,16], p through
// {0.2, 0.5, 0.8}, one fixed seed per index.
struct CorpusParams {
  int n;
  double p;
  std::uint64_t seed;
};

inline CorpusParams corpus_params(int index) {
  static constexpr double kProbabilities[3] = {0.2, 0.5, 0.8};
  return {4 + index % 13, kProbabilities[(index / 13) % 3],
          0x5eedULL * 1000003ULL + static_cast<std::uint64_t>(index)};
}

inline mvc::Graph corpus_graph(int index) {
  const CorpusParams params = corpus_params(index);
  return mvc::random_gnp(params.n, params.p, params.seed);
}

}  // namespace testsupport
