#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "doctest.h"
#include "mvc/baselines.hpp"
#include "mvc/evaluation.hpp"
#include "mvc/generators.hpp"
#include "mvc/nec.hpp"
#include "test_support.hpp"

using mvc::Graph;
using mvc::SelectionRule;
using mvc::SolverState;

namespace {

// Independent re-scoring of the selection rules, used to cross-check
// select_candidate on arbitrary states.
int reference_selection(const Graph& g, const SolverState& s) {
  int best = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!s.active[v] || s.active_degree[v] == 0) continue;
    if (best < 0) {
      best = v;
      continue;
    }
    if (s.active_degree[v] != s.active_degree[best]) {
      if (s.active_degree[v] > s.active_degree[best]) best = v;
      continue;
    }
    auto neighborhood = [&](int w) {
      long long sum = 0;
      for (int u : g.neighbors(w)) {
        if (s.active[u]) sum += s.active_degree[u];
      }
      return sum;
    };
    const long long nv = neighborhood(v);
    const long long nb = neighborhood(best);
    if (nv != nb) {
      if (nv < nb) best = v;
      continue;
    }
    auto deactivation = [&](int w) {
      int count = 0;
      for (int u : g.neighbors(w)) {
        if (s.active[u] && s.active_degree[u] == 1) ++count;
      }
      return count;
    };
    const int dv = deactivation(v);
    const int db = deactivation(best);
    if (dv > db) best = v;
    // equal: keep the lower index, i.e. the current best
  }
  return best;
}

}  // namespace

TEST_CASE("init_state mirrors static degrees") {
  SolverState s = mvc::init_state(mvc::complete_graph(5));
  CHECK(s.active_degree == std::vector<int>{4, 4, 4, 4, 4});
  CHECK(std::all_of(s.active.begin(), s.active.end(), [](char a) { return a == 1; }));
  CHECK(s.covered_edges == 0);
  CHECK(s.cover.empty());
}

TEST_CASE("init_state deactivates isolated vertices") {
  SolverState s = mvc::init_state(Graph::from_edges(3, {}));
  CHECK(std::none_of(s.active.begin(), s.active.end(), [](char a) { return a == 1; }));
}

TEST_CASE("init_state on a star") {
  Graph star = mvc::complete_bipartite(4, 1);
  SolverState s = mvc::init_state(star);
  CHECK(s.active_degree[4] == 4);
  for (int leaf = 0; leaf < 4; ++leaf) CHECK(s.active_degree[leaf] == 1);
}

TEST_CASE("select_candidate prefers the high-degree side of K(5,3)") {
  Graph g = mvc::complete_bipartite(5, 3);
  SolverState s = mvc::init_state(g);
  CHECK(mvc::select_candidate(g, s) == 5);
}

TEST_CASE("select_candidate on P5 walks all three tie levels") {
  Graph p5 = testsupport::path_graph(5);
  SolverState s = mvc::init_state(p5);
  SelectionRule rule;
  const int picked = mvc::select_candidate(p5, s, &rule);
  CHECK(picked == 1);
  CHECK(rule == SelectionRule::index);
  CHECK(picked == reference_selection(p5, s));
}

TEST_CASE("select_candidate falls back to the lowest index on K5") {
  Graph k5 = mvc::complete_graph(5);
  SolverState s = mvc::init_state(k5);
  SelectionRule rule;
  CHECK(mvc::select_candidate(k5, s, &rule) == 0);
  CHECK(rule == SelectionRule::index);
}

TEST_CASE("neighborhood sum settles a degree tie") {
  // 0 and 4 both have degree 3; 0's neighbors include a triangle pair, so
  // its neighborhood sum is 5 against 4's 3 and the tie goes to 4.
  Graph g = Graph::from_edges(
      8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {4, 5}, {4, 6}, {4, 7}});
  SolverState s = mvc::init_state(g);
  SelectionRule rule;
  CHECK(mvc::select_candidate(g, s, &rule) == 4);
  CHECK(rule == SelectionRule::neighborhood_sum);
  CHECK(reference_selection(g, s) == 4);
}

TEST_CASE("deactivation count settles a neighborhood-sum tie") {
  // 0 and 4 tie at degree 3 and neighborhood sum 5, but selecting 4 would
  // deactivate two degree-1 leaves against 0's one.
  Graph g = Graph::from_edges(10, {{4, 5}, {4, 6}, {4, 7}, {7, 8}, {7, 9},
                                   {8, 9}, {0, 1}, {0, 2}, {0, 3}, {2, 3}});
  SolverState s = mvc::init_state(g);
  SelectionRule rule;
  CHECK(mvc::select_candidate(g, s, &rule) == 4);
  CHECK(rule == SelectionRule::deactivation);
  CHECK(reference_selection(g, s) == 4);
}

TEST_CASE("select_candidate matches the reference scorer mid-run") {
  for (int index : {1, 9, 22, 30, 44}) {
    Graph g = testsupport::corpus_graph(index);
    SolverState s = mvc::init_state(g);
    while (s.covered_edges < g.edge_count()) {
      const int picked = mvc::select_candidate(g, s);
      CHECK(picked == reference_selection(g, s));
      mvc::apply_candidate(g, s, picked);
    }
  }
}

TEST_CASE("select_candidate rejects exhausted states") {
  Graph g = mvc::complete_graph(3);
  SolverState s = mvc::init_state(g);
  while (s.covered_edges < g.edge_count()) {
    mvc::apply_candidate(g, s, mvc::select_candidate(g, s));
  }
  CHECK_THROWS_AS(mvc::select_candidate(g, s), std::logic_error);
}

TEST_CASE("apply_candidate covers incident edges on K5") {
  Graph k5 = mvc::complete_graph(5);
  SolverState s = mvc::init_state(k5);
  mvc::apply_candidate(k5, s, 0);
  CHECK(s.covered_edges == 4);
  CHECK(s.active_degree == std::vector<int>{0, 3, 3, 3, 3});
  CHECK(s.cover == std::vector<int>{0});
  CHECK_FALSE(s.active[0]);
}

TEST_CASE("apply_candidate finishes a star in one step") {
  Graph star = mvc::complete_bipartite(4, 1);
  SolverState s = mvc::init_state(star);
  mvc::apply_candidate(star, s, 4);
  CHECK(s.covered_edges == 4);
  for (int leaf = 0; leaf < 4; ++leaf) CHECK_FALSE(s.active[leaf]);
}

TEST_CASE("apply_candidate on P5 deactivates the exposed endpoint") {
  Graph p5 = testsupport::path_graph(5);
  SolverState s = mvc::init_state(p5);
  mvc::apply_candidate(p5, s, 1);
  CHECK(s.covered_edges == 2);
  CHECK_FALSE(s.active[0]);
  CHECK(s.active_degree[2] == 1);
}

TEST_CASE("apply_candidate rejects inactive vertices") {
  Graph p5 = testsupport::path_graph(5);
  SolverState s = mvc::init_state(p5);
  mvc::apply_candidate(p5, s, 1);
  CHECK_THROWS_AS(mvc::apply_candidate(p5, s, 1), std::logic_error);
  CHECK_THROWS_AS(mvc::apply_candidate(p5, s, 0), std::logic_error);
}

TEST_CASE("incremental state matches a from-scratch recount") {
  for (int index : {3, 17, 28, 40}) {
    Graph g = testsupport::corpus_graph(index);
    SolverState s = mvc::init_state(g);
    int previous_covered = 0;
    while (s.covered_edges < g.edge_count()) {
      mvc::apply_candidate(g, s, mvc::select_candidate(g, s));
      CHECK(mvc::state_consistent(g, s));
      CHECK(s.covered_edges > previous_covered);  // strict progress each step
      previous_covered = s.covered_edges;
    }
  }
}

TEST_CASE("nec_cover solves complete graphs exactly") {
  auto result = mvc::nec_cover(mvc::complete_graph(5));
  CHECK(result.cover.size() == 4);
  CHECK(result.cover.vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(result.stats.iterations == 4);
  CHECK(result.stats.ties_by_index == 4);

  for (int k : {10, 30, 50, 100}) {
    auto ladder = mvc::nec_cover(mvc::complete_graph(k));
    CHECK(ladder.cover.size() == k - 1);
    CHECK(ladder.stats.iterations == k - 1);
  }
}

TEST_CASE("nec_cover picks the small side of K(5,3)") {
  auto result = mvc::nec_cover(mvc::complete_bipartite(5, 3));
  CHECK(result.cover.vertices == std::vector<int>{5, 6, 7});
  CHECK(result.stats.iterations == 3);
  CHECK(result.stats.ties_by_index == 2);
}

TEST_CASE("nec_cover finds the optimum of P5") {
  Graph p5 = testsupport::path_graph(5);
  auto result = mvc::nec_cover(p5);
  CHECK(result.cover.vertices == std::vector<int>{1, 3});
  CHECK(result.stats.iterations == 2);
  CHECK(result.stats.ties_by_index == 1);
  CHECK(testsupport::naive_min_cover_size(p5) == 2);
}

TEST_CASE("nec_cover on the edgeless graph does nothing") {
  auto result = mvc::nec_cover(Graph::from_edges(7, {}));
  CHECK(result.cover.empty());
  CHECK(result.stats.iterations == 0);
}

TEST_CASE("nec_cover is valid across the corpus and iteration count matches") {
  for (int index = 0; index < 60; ++index) {
    Graph g = testsupport::corpus_graph(index);
    auto result = mvc::nec_cover(g);
    CHECK(mvc::verify_cover(g, result.cover).valid);
    CHECK(result.stats.iterations == result.cover.size());
    CHECK(static_cast<int>(result.selection_order.size()) == result.cover.size());
  }
}

TEST_CASE("nec_cover never beats the exact oracle") {
  for (int index = 0; index < 40; ++index) {
    Graph g = testsupport::corpus_graph(index);  // corpus keeps n <= 16 < 20
    auto exact = mvc::exact_mvc(g);
    REQUIRE(exact.has_value());
    CHECK(mvc::nec_cover(g).cover.size() >= exact->size());
  }
}

TEST_CASE("nec_cover matches the bipartite optimum for n < m") {
  for (int m = 2; m <= 12; ++m) {
    for (int n = 1; n < m; ++n) {
      auto result = mvc::nec_cover(mvc::complete_bipartite(m, n));
      CHECK(result.cover.size() == n);
    }
  }
}

TEST_CASE("nec_cover is deterministic") {
  Graph g = testsupport::corpus_graph(25);
  auto first = mvc::nec_cover(g);
  auto second = mvc::nec_cover(g);
  CHECK(first.cover == second.cover);
  CHECK(first.selection_order == second.selection_order);
  CHECK(first.stats.iterations == second.stats.iterations);
  CHECK(first.stats.ties_by_neighborhood == second.stats.ties_by_neighborhood);
  CHECK(first.stats.ties_by_deactivation == second.stats.ties_by_deactivation);
  CHECK(first.stats.ties_by_index == second.stats.ties_by_index);
}

TEST_CASE("concurrent solves on one shared graph agree") {
  Graph g = mvc::random_gnp(40, 0.3, 77);
  const auto expected = mvc::nec_cover(g);
  std::vector<mvc::NecResult> results(4);
  std::vector<std::thread> threads;
  for (auto& slot : results) {
    threads.emplace_back([&g, &slot] { slot = mvc::nec_cover(g); });
  }
  for (auto& t : threads) t.join();
  for (const auto& result : results) {
    CHECK(result.cover == expected.cover);
    CHECK(result.selection_order == expected.selection_order);
  }
}
