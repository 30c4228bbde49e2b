#include "mvc/cover.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "mvc/dimacs.hpp"

namespace mvc {

Cover Cover::from_vertices(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Cover c;
  c.vertices = std::move(ids);
  return c;
}

bool Cover::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

Cover read_cover(std::istream& in) {
  std::vector<int> ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    const auto begin = view.find_first_not_of(" \t");
    if (begin == std::string_view::npos) continue;
    const auto end = view.find_last_not_of(" \t");
    view = view.substr(begin, end - begin + 1);
    if (view.front() == 'c' && (view.size() == 1 || view[1] == ' ' || view[1] == '\t')) {
      continue;
    }
    int id = 0;
    auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), id);
    if (ec != std::errc{} || ptr != view.data() + view.size()) {
      throw ParseError("cover file line " + std::to_string(line_no) +
                       ": expected one vertex id, got '" + std::string(view) + "'");
    }
    if (id < 1) {
      throw ParseError("cover file line " + std::to_string(line_no) +
                       ": vertex ids are 1-indexed");
    }
    ids.push_back(id - 1);
  }
  return Cover::from_vertices(std::move(ids));
}

void write_cover(const Cover& c, std::ostream& out) {
  for (int v : c.vertices) out << v + 1 << '\n';
}

}  // namespace mvc
