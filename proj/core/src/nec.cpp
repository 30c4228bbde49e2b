#include "mvc/nec.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace mvc {

namespace {

// Full consistency checks are quadratic; keep them to graphs small enough
// that debug test runs stay fast.
constexpr int kDebugCheckLimit = 64;

}  // namespace

SolverState init_state(const Graph& g) {
  const int n = g.vertex_count();
  SolverState s;
  s.active.assign(n, 0);
  s.active_degree.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    s.active_degree[v] = d;
    s.active[v] = d > 0 ? 1 : 0;  // isolated vertices never participate
  }
  return s;
}

int select_candidate(const Graph& g, const SolverState& s, SelectionRule* rule) {
  const int n = g.vertex_count();
  if (s.covered_edges >= g.edge_count()) {
    throw std::logic_error("select_candidate: no uncovered edges remain");
  }

  // Rule 1: maximum active degree. First active vertex scanned wins, then
  // strict improvement only, which makes the scan deterministic.
  int best_degree = 0;
  for (int v = 0; v < n; ++v) {
    if (s.active[v] && s.active_degree[v] > best_degree) best_degree = s.active_degree[v];
  }
  if (best_degree == 0) {
    throw std::logic_error(
        "select_candidate: edges remain but no active vertex has positive degree");
  }
  std::vector<int> tied;
  for (int v = 0; v < n; ++v) {
    if (s.active[v] && s.active_degree[v] == best_degree) tied.push_back(v);
  }
  if (tied.size() == 1) {
    if (rule) *rule = SelectionRule::degree;
    return tied.front();
  }

  // Rule 2: minimum sum of active neighbors' active degrees.
  std::vector<int> narrowed;
  long long best_score = 0;
  for (int v : tied) {
    long long score = 0;
    for (int u : g.neighbors(v)) {
      if (s.active[u]) score += s.active_degree[u];
    }
    if (narrowed.empty() || score < best_score) {
      best_score = score;
      narrowed.clear();
      narrowed.push_back(v);
    } else if (score == best_score) {
      narrowed.push_back(v);
    }
  }
  if (narrowed.size() == 1) {
    if (rule) *rule = SelectionRule::neighborhood_sum;
    return narrowed.front();
  }

  // Rule 3: maximum count of active degree-1 neighbors. Selecting the
  // winner deactivates the most vertices in one step.
  std::vector<int> finalists;
  int best_deactivation = -1;
  for (int v : narrowed) {
    int deactivation = 0;
    for (int u : g.neighbors(v)) {
      if (s.active[u] && s.active_degree[u] == 1) ++deactivation;
    }
    if (deactivation > best_deactivation) {
      best_deactivation = deactivation;
      finalists.clear();
      finalists.push_back(v);
    } else if (deactivation == best_deactivation) {
      finalists.push_back(v);
    }
  }
  if (finalists.size() == 1) {
    if (rule) *rule = SelectionRule::deactivation;
    return finalists.front();
  }

  // Rule 4: minimum index. Candidates were collected in ascending order.
  if (rule) *rule = SelectionRule::index;
  return finalists.front();
}

void apply_candidate(const Graph& g, SolverState& s, int v) {
  if (v < 0 || v >= g.vertex_count() || !s.active[v]) {
    throw std::logic_error("apply_candidate: vertex is not active");
  }
  // Every active neighbor marks exactly one newly covered edge; inactive
  // neighbors are either in the cover already or fully covered themselves.
  for (int u : g.neighbors(v)) {
    if (!s.active[u]) continue;
    ++s.covered_edges;
    if (--s.active_degree[u] == 0) s.active[u] = 0;
  }
  s.active_degree[v] = 0;
  s.active[v] = 0;
  s.cover.push_back(v);
  assert(g.vertex_count() > kDebugCheckLimit || state_consistent(g, s));
}

bool state_consistent(const Graph& g, const SolverState& s) {
  const int n = g.vertex_count();
  std::vector<char> in_cover(n, 0);
  for (int v : s.cover) in_cover[v] = 1;
  std::vector<int> recomputed(n, 0);
  int covered = 0;
  for (const Edge& e : g.edges()) {
    if (in_cover[e.u] || in_cover[e.v]) {
      ++covered;
    } else {
      ++recomputed[e.u];
      ++recomputed[e.v];
    }
  }
  if (covered != s.covered_edges) return false;
  for (int v = 0; v < n; ++v) {
    if (recomputed[v] != s.active_degree[v]) return false;
    if (s.active[v] && (in_cover[v] || recomputed[v] == 0)) return false;
    if (!s.active[v] && !in_cover[v] && recomputed[v] != 0) return false;
  }
  return true;
}

NecResult nec_cover(const Graph& g) {
  SolverState s = init_state(g);
  SolverStats stats;
  const int m = g.edge_count();
  while (s.covered_edges < m) {
    SelectionRule rule = SelectionRule::degree;
    const int v = select_candidate(g, s, &rule);
    apply_candidate(g, s, v);
    ++stats.iterations;
    switch (rule) {
      case SelectionRule::degree: break;
      case SelectionRule::neighborhood_sum: ++stats.ties_by_neighborhood; break;
      case SelectionRule::deactivation: ++stats.ties_by_deactivation; break;
      case SelectionRule::index: ++stats.ties_by_index; break;
    }
  }
  NecResult result;
  result.selection_order = s.cover;
  result.cover = Cover::from_vertices(std::move(s.cover));
  result.stats = stats;
  return result;
}

}  // namespace mvc
