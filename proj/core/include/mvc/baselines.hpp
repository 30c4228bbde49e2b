#pragma once

#include <cstdint>
#include <optional>

#include "mvc/cover.hpp"
#include "mvc/graph.hpp"

namespace mvc {

inline constexpr std::uint64_t kDefaultExactBudget = 5'000'000;

/// Takes both endpoints of a maximal matching built in seeded-random edge
/// order. The result is a valid cover of even size, at most twice optimal.
Cover matching_2approx(const Graph& g, std::uint64_t seed);

/// Repeatedly selects the vertex of maximum live degree (ties by minimum
/// index) until every edge is covered. The plain greedy baseline.
Cover greedy_degree(const Graph& g);

struct ExactStats {
  std::uint64_t nodes_expanded = 0;
  bool budget_exhausted = false;
  bool brute_force_fallback = false;
};

/// Minimum vertex cover by branch and bound: branches on the highest-degree
/// vertex (v in the cover vs. all neighbors of v in the cover), with
/// degree-1 reduction and a maximal-matching lower bound. The budget counts
/// node expansions; when it runs out the search falls back to brute force
/// for n <= 24 and otherwise returns nullopt, never a wrong answer.
std::optional<Cover> exact_mvc(const Graph& g,
                               std::uint64_t max_nodes = kDefaultExactBudget,
                               ExactStats* stats = nullptr);

/// Exhaustive subset enumeration, n <= 24. Second opinion for exact_mvc.
Cover brute_force_mvc(const Graph& g);

/// Size of a greedy maximal matching; LB <= OPT <= 2*LB.
int matching_lower_bound(const Graph& g);

}  // namespace mvc
