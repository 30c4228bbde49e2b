#include "mvc/evaluation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvc {

namespace {

std::vector<char> membership(const Graph& g, const Cover& c, const char* what) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : c.vertices) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                              " outside graph of size " + std::to_string(g.vertex_count()));
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

VerificationReport verify_cover(const Graph& g, const Cover& c) {
  const auto in = membership(g, c, "verify_cover");
  VerificationReport report;
  for (const Edge& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) report.uncovered.push_back(e);
  }
  report.valid = report.uncovered.empty();
  return report;
}

double penalty_score(const Graph& g, const Cover& candidate, const Cover& reference,
                     PenaltyParams params) {
  if (!std::isfinite(params.lambda) || !std::isfinite(params.beta) ||
      params.lambda < 0.0 || params.beta < 0.0) {
    throw std::invalid_argument("penalty_score: weights must be finite and non-negative");
  }
  const auto in_candidate = membership(g, candidate, "penalty_score candidate");
  const auto in_reference = membership(g, reference, "penalty_score reference");
  double exponential_sum = 0.0;
  for (const Edge& e : g.edges()) {
    const int candidate_endpoints = in_candidate[e.u] + in_candidate[e.v];
    const int reference_endpoints = in_reference[e.u] + in_reference[e.v];
    exponential_sum += std::exp(static_cast<double>(reference_endpoints - candidate_endpoints));
  }
  int hamming = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    hamming += in_candidate[v] != in_reference[v];
  }
  return params.lambda * exponential_sum + params.beta * hamming;
}

double selection_ratio(int candidate_size, int optimal_size) {
  if (candidate_size < 0 || optimal_size < 0) {
    throw std::invalid_argument("selection_ratio: sizes must be non-negative");
  }
  if (optimal_size == 0) {
    if (candidate_size == 0) return 1.0;  // empty-graph convention
    throw std::invalid_argument("selection_ratio: positive cover against optimum 0");
  }
  return static_cast<double>(candidate_size) / static_cast<double>(optimal_size);
}

}  // namespace mvc
