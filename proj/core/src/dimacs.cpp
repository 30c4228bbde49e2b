#include "mvc/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace mvc {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_int(std::string_view token, int line_no, const char* what) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": malformed " + what +
                     " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  EdgeList list;
  bool have_problem_line = false;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_problem_line) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate problem line");
      }
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'p edge <n> <m>'");
      }
      list.n = parse_int(tokens[2], line_no, "vertex count");
      list.declared_m = parse_int(tokens[3], line_no, "edge count");
      if (list.n < 0 || list.declared_m < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": negative count");
      }
      have_problem_line = true;
      continue;
    }
    if (tokens[0] == "e") {
      if (!have_problem_line) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": edge before problem line");
      }
      if (tokens.size() != 3) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      }
      const int u = parse_int(tokens[1], line_no, "endpoint");
      const int v = parse_int(tokens[2], line_no, "endpoint");
      if (u < 1 || u > list.n || v < 1 || v > list.n) {
        throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range");
      }
      if (u == v) {
        throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                         std::to_string(u));
      }
      list.pairs.emplace_back(u, v);
      continue;
    }
    throw ParseError("line " + std::to_string(line_no) + ": unrecognized line type '" +
                     std::string(tokens[0]) + "'");
  }
  if (!have_problem_line) {
    throw ParseError("missing problem line");
  }
  return graph_from_edge_list(list, warnings);
}

Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_dimacs(in, warnings);
}

Graph graph_from_edge_list(const EdgeList& list, std::vector<std::string>* warnings) {
  std::vector<Edge> edges;
  edges.reserve(list.pairs.size());
  for (auto [u, v] : list.pairs) {
    if (u < 1 || u > list.n || v < 1 || v > list.n) {
      throw ParseError("edge endpoint out of range");
    }
    if (u == v) {
      throw ParseError("self-loop at vertex " + std::to_string(u));
    }
    edges.push_back({u - 1, v - 1});
  }
  Graph g = Graph::from_edges(list.n, std::move(edges));
  if (warnings) {
    const std::size_t dropped = list.pairs.size() - static_cast<std::size_t>(g.edge_count());
    if (dropped > 0) {
      warnings->push_back(std::to_string(dropped) + " duplicate edge line(s) collapsed");
    }
    if (g.edge_count() != list.declared_m) {
      warnings->push_back("declared " + std::to_string(list.declared_m) + " edges, got " +
                          std::to_string(g.edge_count()));
    }
  }
  return g;
}

void to_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  to_dimacs(g, out);
  return out.str();
}

}  // namespace mvc
