#include <stdexcept>

#include "doctest.h"
#include "mvc/baselines.hpp"
#include "mvc/evaluation.hpp"
#include "mvc/generators.hpp"
#include "mvc/graph.hpp"
#include "test_support.hpp"

using mvc::Graph;

TEST_CASE("matching_2approx on forced cases") {
  Graph single = Graph::from_edges(2, {{0, 1}});
  CHECK(mvc::matching_2approx(single, 3).vertices == std::vector<int>{0, 1});
  CHECK(mvc::matching_2approx(Graph::from_edges(4, {}), 3).empty());
}

TEST_CASE("matching_2approx always reaches size 4 on K5") {
  Graph k5 = mvc::complete_graph(5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto cover = mvc::matching_2approx(k5, seed);
    CHECK(cover.size() == 4);  // two disjoint edges exhaust every matching
    CHECK(mvc::verify_cover(k5, cover).valid);
  }
}

TEST_CASE("matching_2approx is even, valid and within twice the optimum") {
  for (int index = 0; index < 40; ++index) {
    Graph g = testsupport::corpus_graph(index);
    auto cover = mvc::matching_2approx(g, 1234 + index);
    CHECK(cover.size() % 2 == 0);
    CHECK(mvc::verify_cover(g, cover).valid);
    auto exact = mvc::exact_mvc(g);
    REQUIRE(exact.has_value());
    CHECK(cover.size() <= 2 * exact->size());
  }
}

TEST_CASE("greedy_degree covers a star with its center") {
  Graph star = mvc::complete_bipartite(4, 1);
  CHECK(mvc::greedy_degree(star).vertices == std::vector<int>{4});
}

TEST_CASE("greedy_degree takes the dense side of K(5,3)") {
  auto cover = mvc::greedy_degree(mvc::complete_bipartite(5, 3));
  CHECK(cover.vertices == std::vector<int>{5, 6, 7});
}

TEST_CASE("greedy_degree finds the optimum of P5") {
  Graph p5 = testsupport::path_graph(5);
  auto cover = mvc::greedy_degree(p5);
  CHECK(cover.size() == 2);
  CHECK(cover.vertices == std::vector<int>{1, 3});
  CHECK(testsupport::naive_min_cover_size(p5) == 2);
}

TEST_CASE("greedy_degree is deterministic and valid") {
  for (int index : {6, 18, 31}) {
    Graph g = testsupport::corpus_graph(index);
    auto first = mvc::greedy_degree(g);
    CHECK(first == mvc::greedy_degree(g));
    CHECK(mvc::verify_cover(g, first).valid);
  }
}

TEST_CASE("exact_mvc on known instances") {
  CHECK(mvc::exact_mvc(testsupport::cycle_graph(5))->size() == 3);
  CHECK(mvc::exact_mvc(mvc::complete_bipartite(3, 3))->size() == 3);
  CHECK(mvc::exact_mvc(testsupport::petersen_graph())->size() == 6);
  for (int k = 2; k <= 8; ++k) {
    CHECK(mvc::exact_mvc(mvc::complete_graph(k))->size() == k - 1);
  }
  CHECK(testsupport::naive_min_cover_size(testsupport::cycle_graph(5)) == 3);
  CHECK(testsupport::naive_min_cover_size(testsupport::petersen_graph()) == 6);
}

TEST_CASE("exact_mvc returns a valid minimum cover") {
  for (int index = 0; index < 30; ++index) {
    Graph g = testsupport::corpus_graph(index);
    auto cover = mvc::exact_mvc(g);
    REQUIRE(cover.has_value());
    CHECK(mvc::verify_cover(g, *cover).valid);
  }
}

TEST_CASE("exact_mvc agrees with both independent enumerations on n <= 12") {
  for (int index = 0; index < 150; ++index) {
    Graph g = testsupport::corpus_graph(index);
    if (g.vertex_count() > 12) continue;
    auto cover = mvc::exact_mvc(g);
    REQUIRE(cover.has_value());
    auto brute = mvc::brute_force_mvc(g);
    CHECK(cover->size() == brute.size());
    CHECK(cover->size() == testsupport::naive_min_cover_size(g));
  }
}

TEST_CASE("exact_mvc budget exhaustion is explicit") {
  Graph big = mvc::random_gnp(40, 0.5, 2024);
  mvc::ExactStats stats;
  auto result = mvc::exact_mvc(big, 1, &stats);
  CHECK_FALSE(result.has_value());
  CHECK(stats.budget_exhausted);

  // Small graphs fall back to brute force instead of giving up.
  Graph small = mvc::random_gnp(14, 0.5, 2024);
  mvc::ExactStats fallback_stats;
  auto fallback = mvc::exact_mvc(small, 1, &fallback_stats);
  REQUIRE(fallback.has_value());
  CHECK(fallback_stats.brute_force_fallback);
  CHECK(fallback->size() == testsupport::naive_min_cover_size(small));
}

TEST_CASE("brute_force_mvc basics") {
  CHECK(mvc::brute_force_mvc(mvc::complete_graph(5)).size() == 4);
  CHECK(mvc::brute_force_mvc(testsupport::cycle_graph(5)).size() == 3);
  CHECK(mvc::brute_force_mvc(testsupport::path_graph(5)).size() == 2);
  CHECK(mvc::brute_force_mvc(Graph::from_edges(3, {})).empty());
  CHECK_THROWS_AS(mvc::brute_force_mvc(mvc::random_gnp(25, 0.1, 1)), std::invalid_argument);
}

TEST_CASE("matching_lower_bound basics") {
  CHECK(mvc::matching_lower_bound(mvc::complete_graph(5)) == 2);
  CHECK(mvc::matching_lower_bound(Graph::from_edges(3, {})) == 0);
  CHECK(mvc::matching_lower_bound(Graph::from_edges(2, {{0, 1}})) == 1);
}

TEST_CASE("matching lower bound brackets the optimum") {
  for (int index = 0; index < 40; ++index) {
    Graph g = testsupport::corpus_graph(index);
    const int lb = mvc::matching_lower_bound(g);
    auto exact = mvc::exact_mvc(g);
    REQUIRE(exact.has_value());
    CHECK(lb <= exact->size());
    CHECK(exact->size() <= 2 * lb);
  }
}
