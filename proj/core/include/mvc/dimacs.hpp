#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvc/graph.hpp"

namespace mvc {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raw DIMACS content before index shifting: the declared counts and the
/// 1-indexed endpoint pairs in file order.
struct EdgeList {
  int n = 0;
  int declared_m = 0;
  std::vector<std::pair<int, int>> pairs;
};

/// Parses the DIMACS ASCII edge format: optional `c` comment lines, exactly
/// one `p edge <n> <m>` line (`p col` accepted as a synonym) before any edge
/// line, then `e <u> <v>` lines with 1-indexed endpoints. Self-loops are an
/// error; parallel edges collapse to one with a warning. The declared edge
/// count is advisory; a mismatch after deduplication is also only a warning.
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Conversion step behind parse_dimacs: shifts endpoints to 0-indexed,
/// rejects self-loops, dedupes, and surfaces the advisory-count warnings.
Graph graph_from_edge_list(const EdgeList& list, std::vector<std::string>* warnings = nullptr);

/// Serializes `p edge n m` plus one sorted `e u v` line per edge, 1-indexed,
/// single spaces, `\n` endings, no trailing whitespace. parse_dimacs of the
/// output reconstructs the graph exactly.
void to_dimacs(const Graph& g, std::ostream& out);
std::string to_dimacs(const Graph& g);

}  // namespace mvc
