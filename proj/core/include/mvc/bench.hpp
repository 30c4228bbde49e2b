#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvc/baselines.hpp"
#include "mvc/cover.hpp"
#include "mvc/graph.hpp"
#include "mvc/registry.hpp"

namespace mvc {

enum class Algorithm { nec, greedy, match2, exact };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// An instance is either a DIMACS file path or a generator spec:
///   gen:complete:k | gen:bipartite:m:n | gen:gnm:n:m:seed | gen:gnp:n:p:seed
/// Anything starting with "gen:" is parsed as a generator spec.
struct InstanceSpec {
  enum class Kind { file, generator };

  Kind kind = Kind::file;
  std::string text;

  static InstanceSpec parse(std::string_view text);

  /// Canonical stem for files, the spec text itself for generators.
  std::string display_name() const;
};

/// Builds the graph an instance denotes. `complemented_out`, when given,
/// reports whether the complement-on-load policy actually applied.
Graph load_instance(const InstanceSpec& spec, std::optional<bool> complement,
                    std::vector<std::string>* warnings = nullptr,
                    bool* complemented_out = nullptr);

struct RunOptions {
  /// Complement the graph on load. Unset means the default policy: files
  /// yes (benchmark sets are distributed as max-clique instances),
  /// generator specs no.
  std::optional<bool> complement;
  std::uint64_t seed = 1;  // drives match2's edge order
  std::uint64_t exact_budget = kDefaultExactBudget;
  std::vector<std::string>* warning_sink = nullptr;
};

struct BenchmarkRecord {
  std::string instance;
  std::string algorithm;
  int n = 0;
  int m = 0;
  int cover_size = 0;
  std::optional<int> optimal;
  std::optional<double> ratio;
  std::chrono::nanoseconds elapsed{0};
  long long iterations = 0;
  std::optional<std::uint64_t> seed;
  bool valid = false;
};

/// Solves one instance with one algorithm. Only the solve call is timed;
/// verification always runs; the ratio is filled from the registry (files)
/// or analytically (complete/bipartite generators) when the optimum is
/// known and refers to the graph actually solved. Throws on parse failure
/// or an exhausted exact budget.
BenchmarkRecord run_instance(const InstanceSpec& spec, Algorithm algo,
                             const RunOptions& options = {},
                             const OptimaRegistry* registry = nullptr,
                             Cover* cover_out = nullptr);

struct SuiteResult {
  std::vector<BenchmarkRecord> records;
  std::vector<std::string> errors;  // per-instance failures, in suite order

  bool all_valid() const;
};

using RecordSink = std::function<void(const BenchmarkRecord&)>;

/// One record per (instance, algorithm, repetition), in that order.
/// Per-instance failures are collected, not fatal. Sequential by default so
/// timings are undisturbed; `parallel` opts into concurrent solves (records
/// still emitted in suite order).
SuiteResult run_suite(std::span<const InstanceSpec> instances,
                      std::span<const Algorithm> algorithms, int repetitions,
                      const RunOptions& options = {},
                      const OptimaRegistry* registry = nullptr,
                      bool parallel = false, const RecordSink& sink = nullptr);

/// CSV: header instance,algorithm,n,m,cover_size,optimal,ratio,time_ms,
/// iterations,seed,valid; '.' decimal separator, ratio to 4 decimal places,
/// time in milliseconds to 3 decimal places, empty fields for absent values.
void emit_report_csv(std::span<const BenchmarkRecord> records, std::ostream& out);

/// Same columns as a Markdown pipe table.
void emit_report_markdown(std::span<const BenchmarkRecord> records, std::ostream& out);

/// Least-squares slope of log(elapsed) vs log(n). Requires at least four
/// records with nonzero timings and at least two distinct sizes.
double fit_scaling(std::span<const BenchmarkRecord> records);

/// Runs the solver on a K_n ladder, keeping the fastest of `repetitions`
/// runs per size. Feed the result to fit_scaling.
std::vector<BenchmarkRecord> measure_complete_ladder(std::span<const int> sizes,
                                                     int repetitions = 3);

/// Manifest: one instance spec per line; '#' comments and blanks ignored.
std::vector<InstanceSpec> read_manifest(std::istream& in);

}  // namespace mvc
