// mvc — minimum vertex cover toolkit CLI.
//
// Subcommands:
//   solve    run one algorithm on one instance, print size/ratio/time
//   verify   check a cover file against a graph file
//   gen      write a generated graph as DIMACS to stdout
//   bench    run a manifest of instances and emit a CSV/Markdown report
//   scaling  time the solver on a complete-graph ladder and fit the slope
//
// Instances are DIMACS files or generator specs (gen:complete:100, ...).
// Files are complemented on load by default because the common benchmark
// sets are distributed as max-clique instances; --no-complement disables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvc/mvc.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalidCover = 2;

std::optional<bool> complement_option(bool force_on, bool force_off) {
  if (force_on) return true;
  if (force_off) return false;
  return std::nullopt;
}

// Resolution order: --registry flag, MVC_REGISTRY env var, ./data/known_optima.csv.
std::optional<mvc::OptimaRegistry> load_registry(const std::string& flag_path) {
  std::string path = flag_path;
  if (path.empty()) {
    if (const char* env = std::getenv("MVC_REGISTRY")) path = env;
  }
  if (path.empty()) {
    const char* fallback = "data/known_optima.csv";
    if (std::filesystem::exists(fallback)) path = fallback;
  }
  if (path.empty()) return std::nullopt;
  return mvc::OptimaRegistry::load_file(path);
}

mvc::Algorithm algorithm_or_throw(const std::string& name) {
  auto algo = mvc::parse_algorithm(name);
  if (!algo) throw CLI::ValidationError("--algo", "unknown algorithm '" + name + "'");
  return *algo;
}

std::string format_time(std::chrono::nanoseconds elapsed) {
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
  std::ostringstream out;
  out << us / 1000 << " ms (" << us << " us)";
  return out.str();
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& warning : warnings) std::cerr << "warning: " << warning << '\n';
}

int cmd_solve(const std::string& instance_text, const std::string& algo_name,
              bool force_complement, bool no_complement, std::uint64_t seed,
              std::uint64_t budget, bool print_cover, const std::string& registry_path) {
  const auto spec = mvc::InstanceSpec::parse(instance_text);
  const auto algo = algorithm_or_throw(algo_name);
  const auto registry = load_registry(registry_path);

  std::vector<std::string> warnings;
  mvc::RunOptions options;
  options.complement = complement_option(force_complement, no_complement);
  options.seed = seed;
  options.exact_budget = budget;
  options.warning_sink = &warnings;

  mvc::Cover cover;
  const auto record =
      mvc::run_instance(spec, algo, options, registry ? &*registry : nullptr, &cover);
  print_warnings(warnings);

  std::ostringstream summary;
  summary << "instance: " << record.instance << '\n'
          << "algorithm: " << record.algorithm << '\n'
          << "n: " << record.n << '\n'
          << "m: " << record.m << '\n'
          << "cover_size: " << record.cover_size << '\n';
  if (record.optimal) summary << "optimal: " << *record.optimal << '\n';
  if (record.ratio) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", *record.ratio);
    summary << "ratio: " << buffer << '\n';
  }
  summary << "time: " << format_time(record.elapsed) << '\n'
          << "iterations: " << record.iterations << '\n'
          << "valid: " << (record.valid ? "true" : "false") << '\n';

  if (print_cover) {
    // Prefix the summary as cover-file comments so stdout is a valid cover file.
    std::istringstream lines(summary.str());
    std::string line;
    while (std::getline(lines, line)) std::cout << "c " << line << '\n';
    mvc::write_cover(cover, std::cout);
  } else {
    std::cout << summary.str();
  }
  if (!record.valid) {
    std::cerr << "error: produced cover failed verification\n";
    return kExitInvalidCover;
  }
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& cover_path,
               bool force_complement, bool no_complement) {
  const auto spec = mvc::InstanceSpec::parse(graph_path);
  std::vector<std::string> warnings;
  const mvc::Graph g =
      mvc::load_instance(spec, complement_option(force_complement, no_complement), &warnings);
  print_warnings(warnings);

  std::ifstream cover_file(cover_path);
  if (!cover_file) {
    std::cerr << "error: cannot open cover file '" << cover_path << "'\n";
    return kExitFailure;
  }
  const mvc::Cover cover = mvc::read_cover(cover_file);
  const auto report = mvc::verify_cover(g, cover);
  if (report.valid) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "invalid (" << report.uncovered.size() << " uncovered edges)\n";
  for (const mvc::Edge& e : report.uncovered) {
    std::cout << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
  return kExitInvalidCover;
}

int cmd_gen(const std::string& spec_text) {
  // Accept both bare specs and the gen:-prefixed form used by solve/bench.
  const std::string with_prefix =
      spec_text.starts_with("gen:") ? spec_text : "gen:" + spec_text;
  const auto spec = mvc::InstanceSpec::parse(with_prefix);
  const mvc::Graph g = mvc::load_instance(spec, false);
  mvc::to_dimacs(g, std::cout);
  return 0;
}

int cmd_bench(const std::string& manifest_path, const std::string& algos_text,
              const std::string& format, int repetitions, bool parallel,
              bool force_complement, bool no_complement, std::uint64_t seed,
              const std::string& out_path, const std::string& registry_path) {
  std::ifstream manifest(manifest_path);
  if (!manifest) {
    std::cerr << "error: cannot open manifest '" << manifest_path << "'\n";
    return kExitFailure;
  }
  const auto specs = mvc::read_manifest(manifest);
  if (specs.empty()) {
    std::cerr << "error: manifest lists no instances\n";
    return kExitFailure;
  }
  std::vector<mvc::Algorithm> algorithms;
  {
    std::istringstream in(algos_text);
    std::string name;
    while (std::getline(in, name, ',')) algorithms.push_back(algorithm_or_throw(name));
  }

  const auto registry = load_registry(registry_path);
  mvc::RunOptions options;
  options.complement = complement_option(force_complement, no_complement);
  options.seed = seed;

  const auto suite = mvc::run_suite(specs, algorithms, repetitions, options,
                                    registry ? &*registry : nullptr, parallel);
  for (const auto& error : suite.errors) std::cerr << "error: " << error << '\n';

  if (format == "markdown") {
    mvc::emit_report_markdown(suite.records, std::cout);
  } else {
    mvc::emit_report_csv(suite.records, std::cout);
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write results file '" << out_path << "'\n";
      return kExitFailure;
    }
    mvc::emit_report_csv(suite.records, out);
  }
  return suite.all_valid() ? 0 : kExitInvalidCover;
}

int cmd_scaling(const std::string& family, const std::vector<int>& sizes, int repetitions) {
  if (family != "complete") {
    std::cerr << "error: only --family complete is supported\n";
    return kExitFailure;
  }
  if (sizes.size() < 4) {
    std::cerr << "error: need at least 4 sizes to fit a slope\n";
    return kExitFailure;
  }
  const auto ladder = mvc::measure_complete_ladder(sizes, repetitions);
  std::cout << "n,time_ms\n";
  for (const auto& record : ladder) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3f",
                  static_cast<double>(record.elapsed.count()) / 1e6);
    std::cout << record.n << ',' << buffer << '\n';
  }
  char slope[32];
  std::snprintf(slope, sizeof(slope), "%.3f", mvc::fit_scaling(ladder));
  std::cout << "slope: " << slope << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum vertex cover toolkit"};
  app.require_subcommand(1);

  std::string instance;
  std::string algo = "nec";
  std::string registry_path;
  bool force_complement = false;
  bool no_complement = false;
  bool print_cover = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = mvc::kDefaultExactBudget;

  auto* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("instance", instance, "DIMACS file or gen:<spec>")->required();
  solve->add_option("--algo", algo, "nec|greedy|match2|exact")->capture_default_str();
  solve->add_flag("--complement", force_complement, "complement the graph on load");
  solve->add_flag("--no-complement", no_complement, "never complement on load");
  solve->add_option("--seed", seed, "seed for match2")->capture_default_str();
  solve->add_option("--budget", budget, "node-expansion budget for exact")
      ->capture_default_str();
  solve->add_flag("--print-cover", print_cover, "write the cover (1-indexed) to stdout");
  solve->add_option("--registry", registry_path, "known-optima CSV path");

  std::string graph_path;
  std::string cover_path;
  auto* verify = app.add_subcommand("verify", "check a cover file against a graph");
  verify->add_option("graph", graph_path, "DIMACS file or gen:<spec>")->required();
  verify->add_option("cover", cover_path, "cover file, one 1-indexed id per line")->required();
  verify->add_flag("--complement", force_complement, "complement the graph on load");
  verify->add_flag("--no-complement", no_complement, "never complement on load");

  std::string gen_spec;
  auto* gen = app.add_subcommand("gen", "write a generated graph as DIMACS");
  gen->add_option("spec", gen_spec, "complete:k | bipartite:m:n | gnm:n:m:seed | gnp:n:p:seed")
      ->required();

  std::string manifest_path;
  std::string algos = "nec";
  std::string format = "csv";
  std::string out_path = "bench_results.csv";
  int repetitions = 1;
  bool parallel = false;
  auto* bench = app.add_subcommand("bench", "run a manifest of instances");
  bench->add_option("manifest", manifest_path, "file with one instance spec per line")
      ->required();
  bench->add_option("--algo", algos, "comma-separated algorithm list")->capture_default_str();
  bench->add_option("--format", format, "csv|markdown")
      ->check(CLI::IsMember({"csv", "markdown"}))
      ->capture_default_str();
  bench->add_option("--reps", repetitions, "repetitions per instance")->capture_default_str();
  bench->add_flag("--parallel", parallel, "solve instances concurrently (disturbs timings)");
  bench->add_flag("--complement", force_complement, "complement all instances on load");
  bench->add_flag("--no-complement", no_complement, "never complement on load");
  bench->add_option("--seed", seed, "seed for match2")->capture_default_str();
  bench->add_option("--out", out_path, "CSV results file (empty to skip)")
      ->capture_default_str();
  bench->add_option("--registry", registry_path, "known-optima CSV path");

  std::string family = "complete";
  std::vector<int> sizes = {100, 200, 300, 400, 500, 600, 700, 800};
  int scaling_reps = 3;
  auto* scaling = app.add_subcommand("scaling", "time a generator ladder and fit the slope");
  scaling->add_option("--family", family, "generator family")->capture_default_str();
  scaling->add_option("--sizes", sizes, "ladder sizes")->delimiter(',')->capture_default_str();
  scaling->add_option("--reps", scaling_reps, "runs per size, fastest kept")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return cmd_solve(instance, algo, force_complement, no_complement, seed, budget,
                       print_cover, registry_path);
    }
    if (verify->parsed()) {
      return cmd_verify(graph_path, cover_path, force_complement, no_complement);
    }
    if (gen->parsed()) {
      return cmd_gen(gen_spec);
    }
    if (bench->parsed()) {
      return cmd_bench(manifest_path, algos, format, repetitions, parallel, force_complement,
                       no_complement, seed, out_path, registry_path);
    }
    if (scaling->parsed()) {
      return cmd_scaling(family, sizes, scaling_reps);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
