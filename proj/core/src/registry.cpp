#include "mvc/registry.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mvc/dimacs.hpp"

namespace mvc {

namespace {

constexpr std::string_view kHeader =
    "instance,n,optimal_cover,complemented,source,cover_solver_size,"
    "cover_solver_time_ms,notes";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

long long parse_number(const std::string& field, int line_no, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("registry line " + std::to_string(line_no) + ": bad " + what + " '" +
                     field + "'");
  }
  return value;
}

}  // namespace

std::string canonical_instance_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (c == '_') {
      out.push_back('-');
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

OptimaRegistry OptimaRegistry::load(std::istream& in) {
  OptimaRegistry registry;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      if (line != kHeader) {
        throw ParseError("registry line 1: unexpected header");
      }
      have_header = true;
      continue;
    }
    auto fields = split_csv(line);
    if (fields.size() < 8) {
      throw ParseError("registry line " + std::to_string(line_no) + ": expected 8 fields, got " +
                       std::to_string(fields.size()));
    }
    // The notes field is last and may itself contain commas.
    for (std::size_t i = 8; i < fields.size(); ++i) {
      fields[7] += ',' + fields[i];
    }
    KnownOptimum row;
    row.instance = fields[0];
    row.n = static_cast<int>(parse_number(fields[1], line_no, "vertex count"));
    row.optimal_cover = static_cast<int>(parse_number(fields[2], line_no, "optimal cover"));
    if (fields[3] == "true") {
      row.complemented = true;
    } else if (fields[3] == "false") {
      row.complemented = false;
    } else {
      throw ParseError("registry line " + std::to_string(line_no) + ": bad complemented flag '" +
                       fields[3] + "'");
    }
    row.source = fields[4];
    if (!fields[5].empty()) row.cover_solver_size = parse_number(fields[5], line_no, "size");
    if (!fields[6].empty()) row.cover_solver_time_ms = parse_number(fields[6], line_no, "time");
    row.notes = fields[7];
    registry.add(std::move(row));
  }
  if (!have_header) {
    throw ParseError("registry: empty file");
  }
  return registry;
}

OptimaRegistry OptimaRegistry::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("registry: cannot open " + path.string());
  }
  return load(in);
}

void OptimaRegistry::save(std::ostream& out) const {
  out << kHeader << '\n';
  for (const KnownOptimum& row : rows_) {
    out << row.instance << ',' << row.n << ',' << row.optimal_cover << ','
        << (row.complemented ? "true" : "false") << ',' << row.source << ',';
    if (row.cover_solver_size) out << *row.cover_solver_size;
    out << ',';
    if (row.cover_solver_time_ms) out << *row.cover_solver_time_ms;
    out << ',' << row.notes << '\n';
  }
}

void OptimaRegistry::add(KnownOptimum row) {
  if (row.n < 0 || row.optimal_cover < 0 || row.optimal_cover > row.n) {
    throw ParseError("registry: instance '" + row.instance +
                     "' violates 0 <= optimal_cover <= n");
  }
  row.instance = canonical_instance_name(row.instance);
  rows_.push_back(std::move(row));
}

const KnownOptimum* OptimaRegistry::find(std::string_view instance) const {
  const std::string key = canonical_instance_name(instance);
  for (const KnownOptimum& row : rows_) {
    if (row.instance == key) return &row;
  }
  return nullptr;
}

}  // namespace mvc
