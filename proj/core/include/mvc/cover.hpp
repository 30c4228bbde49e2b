#pragma once

#include <iosfwd>
#include <vector>

namespace mvc {

/// A set of selected vertices, stored sorted and deduplicated.
struct Cover {
  std::vector<int> vertices;

  static Cover from_vertices(std::vector<int> ids);

  int size() const noexcept { return static_cast<int>(vertices.size()); }
  bool empty() const noexcept { return vertices.empty(); }
  bool contains(int v) const;

  friend bool operator==(const Cover&, const Cover&) = default;
};

/// Cover file format: one 1-indexed vertex id per line; `c` comment lines
/// and blank lines are allowed. Both functions use that format bit-exactly.
Cover read_cover(std::istream& in);
void write_cover(const Cover& c, std::ostream& out);

}  // namespace mvc
