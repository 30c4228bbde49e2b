#pragma once

#include <vector>

#include "mvc/cover.hpp"
#include "mvc/graph.hpp"

namespace mvc {

struct VerificationReport {
  bool valid = true;
  std::vector<Edge> uncovered;  // sorted; empty iff valid
};

/// Checks that every edge has at least one endpoint in c. Throws
/// std::out_of_range if c references a vertex id >= g.vertex_count().
VerificationReport verify_cover(const Graph& g, const Cover& c);

struct PenaltyParams {
  double lambda = 1.0;
  double beta = 1.0;
};

/// Diagnostic objective comparing a candidate cover against a reference:
///   lambda * sum over edges of exp(ref_endpoints - cand_endpoints)
///   + beta * hamming(candidate, reference)
/// where the endpoint count of an edge under a cover is 0, 1 or 2. The
/// exponential is applied per edge and summed, so the score is finite,
/// monotone in per-edge coverage deficit, and equals lambda * m when the
/// candidate matches the reference.
double penalty_score(const Graph& g, const Cover& candidate, const Cover& reference,
                     PenaltyParams params = {});

/// candidate size / optimal size, the 1+eps quality measure. An empty
/// candidate against an empty optimum is defined as 1; a positive candidate
/// against optimum 0 is an error.
double selection_ratio(int candidate_size, int optimal_size);

}  // namespace mvc
