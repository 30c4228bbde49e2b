#include "mvc/baselines.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mvc/rng.hpp"

namespace mvc {

Cover matching_2approx(const Graph& g, std::uint64_t seed) {
  const int m = g.edge_count();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  for (int i = m - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<char> picked(g.vertex_count(), 0);
  std::vector<int> cover;
  for (int idx : order) {
    const Edge& e = g.edges()[idx];
    if (picked[e.u] || picked[e.v]) continue;  // edge already covered
    picked[e.u] = 1;
    picked[e.v] = 1;
    cover.push_back(e.u);
    cover.push_back(e.v);
  }
  return Cover::from_vertices(std::move(cover));
}

Cover greedy_degree(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<int> live_degree(n);
  std::vector<char> active(n, 0);
  for (int v = 0; v < n; ++v) {
    live_degree[v] = g.degree(v);
    active[v] = live_degree[v] > 0 ? 1 : 0;
  }
  std::vector<int> cover;
  int covered = 0;
  while (covered < m) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (active[v] && (best < 0 || live_degree[v] > live_degree[best])) best = v;
    }
    if (best < 0 || live_degree[best] == 0) {
      throw std::logic_error("greedy_degree: inconsistent live degrees");
    }
    for (int u : g.neighbors(best)) {
      if (!active[u]) continue;
      ++covered;
      if (--live_degree[u] == 0) active[u] = 0;
    }
    live_degree[best] = 0;
    active[best] = 0;
    cover.push_back(best);
  }
  return Cover::from_vertices(std::move(cover));
}

int matching_lower_bound(const Graph& g) {
  std::vector<char> matched(g.vertex_count(), 0);
  int size = 0;
  for (const Edge& e : g.edges()) {
    if (matched[e.u] || matched[e.v]) continue;
    matched[e.u] = 1;
    matched[e.v] = 1;
    ++size;
  }
  return size;
}

Cover brute_force_mvc(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 24) {
    throw std::invalid_argument("brute_force_mvc: n must be at most 24");
  }
  std::vector<std::uint32_t> adj_mask(n, 0);
  for (const Edge& e : g.edges()) {
    adj_mask[e.u] |= 1u << e.v;
    adj_mask[e.v] |= 1u << e.u;
  }
  std::uint32_t best_mask = 0;
  int best_size = 0;
  for (int v = 0; v < n; ++v) {
    if (adj_mask[v] != 0) {
      best_mask |= 1u << v;
      ++best_size;
    }
  }
  const std::uint32_t limit = n == 0 ? 0 : (1u << n) - 1;
  for (std::uint32_t mask = 0; mask <= limit; ++mask) {
    if (std::popcount(mask) >= best_size) continue;
    bool covers = true;
    for (int v = 0; v < n && covers; ++v) {
      if (!(mask & (1u << v)) && (adj_mask[v] & ~mask) != 0) covers = false;
    }
    if (covers) {
      best_mask = mask;
      best_size = std::popcount(mask);
    }
  }
  std::vector<int> vertices;
  for (int v = 0; v < n; ++v) {
    if (best_mask & (1u << v)) vertices.push_back(v);
  }
  return Cover::from_vertices(std::move(vertices));
}

namespace {

// Branch-and-bound working set. Vertices leave the residual graph either by
// entering the cover or by becoming isolated; a trail records every change
// for O(1) undo.
class BranchAndBound {
public:
  BranchAndBound(const Graph& g, std::uint64_t max_nodes)
      : graph_(g),
        alive_(g.vertex_count(), 1),
        live_degree_(g.vertex_count()),
        max_nodes_(max_nodes) {
    for (int v = 0; v < g.vertex_count(); ++v) live_degree_[v] = g.degree(v);
    live_edges_ = g.edge_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (live_degree_[v] > 0) best_.push_back(v);  // trivial upper bound
    }
  }

  bool run() {
    search();
    return !exhausted_;
  }

  const std::vector<int>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

private:
  enum class Action { removed, taken };

  void remove_vertex(int v, std::vector<std::pair<Action, int>>& trail, bool into_cover) {
    alive_[v] = 0;
    for (int u : graph_.neighbors(v)) {
      if (!alive_[u]) continue;
      --live_degree_[u];
      --live_edges_;
    }
    if (into_cover) {
      current_.push_back(v);
      trail.emplace_back(Action::taken, v);
    } else {
      trail.emplace_back(Action::removed, v);
    }
  }

  void undo(std::vector<std::pair<Action, int>>& trail) {
    while (!trail.empty()) {
      auto [action, v] = trail.back();
      trail.pop_back();
      alive_[v] = 1;
      for (int u : graph_.neighbors(v)) {
        if (!alive_[u]) continue;
        ++live_degree_[u];
        ++live_edges_;
      }
      if (action == Action::taken) current_.pop_back();
    }
  }

  int matching_bound() const {
    // Greedy maximal matching over the residual graph.
    std::vector<char> matched(graph_.vertex_count(), 0);
    int size = 0;
    for (const Edge& e : graph_.edges()) {
      if (!alive_[e.u] || !alive_[e.v]) continue;
      if (matched[e.u] || matched[e.v]) continue;
      matched[e.u] = 1;
      matched[e.v] = 1;
      ++size;
    }
    return size;
  }

  void search() {
    if (exhausted_) return;
    if (++nodes_ > max_nodes_) {
      exhausted_ = true;
      return;
    }
    std::vector<std::pair<Action, int>> trail;

    // Reductions: drop isolated vertices; a degree-1 vertex forces its
    // neighbor into the cover.
    bool changed = true;
    while (changed && static_cast<int>(current_.size()) < static_cast<int>(best_.size())) {
      changed = false;
      for (int v = 0; v < graph_.vertex_count(); ++v) {
        if (!alive_[v]) continue;
        if (live_degree_[v] == 0) {
          remove_vertex(v, trail, false);
          changed = true;
        } else if (live_degree_[v] == 1) {
          int neighbor = -1;
          for (int u : graph_.neighbors(v)) {
            if (alive_[u]) {
              neighbor = u;
              break;
            }
          }
          remove_vertex(neighbor, trail, true);
          changed = true;
          break;  // degrees shifted; rescan
        }
      }
    }

    if (live_edges_ == 0) {
      if (current_.size() < best_.size()) best_ = current_;
      undo(trail);
      return;
    }
    if (static_cast<int>(current_.size()) + matching_bound() >=
        static_cast<int>(best_.size())) {
      undo(trail);
      return;
    }

    int pivot = -1;
    for (int v = 0; v < graph_.vertex_count(); ++v) {
      if (alive_[v] && (pivot < 0 || live_degree_[v] > live_degree_[pivot])) pivot = v;
    }

    // Branch A: pivot joins the cover.
    {
      std::vector<std::pair<Action, int>> branch;
      remove_vertex(pivot, branch, true);
      search();
      undo(branch);
    }
    // Branch B: pivot stays out, so all of its live neighbors join.
    if (!exhausted_) {
      std::vector<std::pair<Action, int>> branch;
      std::vector<int> neighbors;
      for (int u : graph_.neighbors(pivot)) {
        if (alive_[u]) neighbors.push_back(u);
      }
      for (int u : neighbors) remove_vertex(u, branch, true);
      remove_vertex(pivot, branch, false);
      search();
      undo(branch);
    }
    undo(trail);
  }

  const Graph& graph_;
  std::vector<char> alive_;
  std::vector<int> live_degree_;
  int live_edges_ = 0;
  std::vector<int> current_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_;
  bool exhausted_ = false;
};

}  // namespace

std::optional<Cover> exact_mvc(const Graph& g, std::uint64_t max_nodes, ExactStats* stats) {
  BranchAndBound search(g, max_nodes);
  const bool completed = search.run();
  if (stats) {
    stats->nodes_expanded = search.nodes();
    stats->budget_exhausted = !completed;
    stats->brute_force_fallback = false;
  }
  if (completed) {
    return Cover::from_vertices(search.best());
  }
  if (g.vertex_count() <= 24) {
    if (stats) stats->brute_force_fallback = true;
    return brute_force_mvc(g);
  }
  return std::nullopt;
}

}  // namespace mvc
