#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mvc {

/// Lowercases and maps '_' to '-' so registry keys match benchmark file
/// stems regardless of naming convention (brock800_1 == Brock800-1).
std::string canonical_instance_name(std::string_view name);

/// One row of the known-optima registry. `complemented` records whether the
/// optimum refers to the complement of the distributed file (the convention
/// for max-clique benchmark sets). The cover_solver_* columns carry the
/// published results of the COVER solver as reference metadata only.
struct KnownOptimum {
  std::string instance;  // canonical name
  int n = 0;
  int optimal_cover = 0;
  bool complemented = false;
  std::string source;
  std::optional<long long> cover_solver_size;
  std::optional<long long> cover_solver_time_ms;
  std::string notes;
};

/// CSV-backed registry. Rows keep file order, so load followed by save
/// reproduces the file byte for byte.
class OptimaRegistry {
public:
  static OptimaRegistry load(std::istream& in);
  static OptimaRegistry load_file(const std::filesystem::path& path);

  void save(std::ostream& out) const;

  /// Validates 0 <= optimal_cover <= n and canonicalizes the name.
  void add(KnownOptimum row);

  const KnownOptimum* find(std::string_view instance) const;
  const std::vector<KnownOptimum>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

private:
  std::vector<KnownOptimum> rows_;
};

}  // namespace mvc
