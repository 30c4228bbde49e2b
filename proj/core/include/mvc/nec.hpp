#pragma once

#include <vector>

#include "mvc/cover.hpp"
#include "mvc/graph.hpp"

namespace mvc {

/// Which rule settled a candidate selection.
enum class SelectionRule { degree, neighborhood_sum, deactivation, index };

/// Mutable per-run bookkeeping for the neighborhood-evaluation solver.
/// active_degree[v] counts incident edges not yet covered; a vertex leaves
/// the active set when that count reaches zero or it joins the cover.
struct SolverState {
  std::vector<char> active;
  std::vector<int> active_degree;
  int covered_edges = 0;
  std::vector<int> cover;  // selection order
};

struct SolverStats {
  int iterations = 0;
  int ties_by_neighborhood = 0;  // settled by the neighborhood degree sum
  int ties_by_deactivation = 0;  // settled by the degree-1 neighbor count
  int ties_by_index = 0;         // settled by the index fallback
};

/// Fresh state: active degrees equal static degrees, isolated vertices start
/// inactive, cover empty.
SolverState init_state(const Graph& g);

/// Candidate choice, applied in order until one vertex remains:
///   1. maximum active degree over active vertices;
///   2. minimum sum of active neighbors' active degrees;
///   3. maximum count of active neighbors with active degree exactly 1;
///   4. minimum vertex index.
/// Rules 2-4 only ever see the vertices still tied by the previous rule.
/// Requires at least one uncovered edge; throws std::logic_error if the
/// state is internally inconsistent.
int select_candidate(const Graph& g, const SolverState& s, SelectionRule* rule = nullptr);

/// Covers every remaining edge at v, decrements neighbor degrees,
/// deactivates neighbors that drop to zero, and moves v into the cover.
/// v must be active.
void apply_candidate(const Graph& g, SolverState& s, int v);

/// Recomputes active degrees and the covered-edge count from scratch and
/// compares them with the incremental bookkeeping.
bool state_consistent(const Graph& g, const SolverState& s);

struct NecResult {
  Cover cover;
  std::vector<int> selection_order;
  SolverStats stats;
};

/// Runs the solver to completion. Deterministic: identical graphs yield
/// identical selection sequences and stats. Pure with respect to g, so any
/// number of solves may run concurrently on the same Graph.
NecResult nec_cover(const Graph& g);

}  // namespace mvc
