#include "mvc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mvc/dimacs.hpp"
#include "mvc/evaluation.hpp"
#include "mvc/generators.hpp"
#include "mvc/nec.hpp"

namespace mvc {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string> split_on(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

long long spec_number(const std::string& field, const std::string& spec) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("instance spec '" + spec + "': bad number '" + field + "'");
  }
  return value;
}

std::uint64_t spec_seed(const std::string& field, const std::string& spec) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("instance spec '" + spec + "': bad seed '" + field + "'");
  }
  return value;
}

struct GeneratorSpec {
  enum class Family { complete, bipartite, gnm, gnp };
  Family family;
  long long a = 0;
  long long b = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

GeneratorSpec parse_generator(const std::string& text) {
  // text is the part after "gen:".
  auto parts = split_on(text, ':');
  GeneratorSpec spec;
  const std::string& family = parts[0];
  if (family == "complete") {
    if (parts.size() != 2) throw ParseError("instance spec 'gen:" + text + "': want complete:k");
    spec.family = GeneratorSpec::Family::complete;
    spec.a = spec_number(parts[1], text);
  } else if (family == "bipartite") {
    if (parts.size() != 3) throw ParseError("instance spec 'gen:" + text + "': want bipartite:m:n");
    spec.family = GeneratorSpec::Family::bipartite;
    spec.a = spec_number(parts[1], text);
    spec.b = spec_number(parts[2], text);
  } else if (family == "gnm") {
    if (parts.size() != 4) throw ParseError("instance spec 'gen:" + text + "': want gnm:n:m:seed");
    spec.family = GeneratorSpec::Family::gnm;
    spec.a = spec_number(parts[1], text);
    spec.b = spec_number(parts[2], text);
    spec.seed = spec_seed(parts[3], text);
  } else if (family == "gnp") {
    if (parts.size() != 4) throw ParseError("instance spec 'gen:" + text + "': want gnp:n:p:seed");
    spec.family = GeneratorSpec::Family::gnp;
    spec.a = spec_number(parts[1], text);
    char* end = nullptr;
    spec.p = std::strtod(parts[2].c_str(), &end);
    if (end != parts[2].c_str() + parts[2].size() || parts[2].empty()) {
      throw ParseError("instance spec 'gen:" + text + "': bad probability '" + parts[2] + "'");
    }
    spec.seed = spec_seed(parts[3], text);
  } else {
    throw ParseError("instance spec 'gen:" + text + "': unknown family '" + family + "'");
  }
  return spec;
}

Graph build_generator(const GeneratorSpec& spec) {
  switch (spec.family) {
    case GeneratorSpec::Family::complete:
      return complete_graph(static_cast<int>(spec.a));
    case GeneratorSpec::Family::bipartite:
      return complete_bipartite(static_cast<int>(spec.a), static_cast<int>(spec.b));
    case GeneratorSpec::Family::gnm:
      return random_gnm(static_cast<int>(spec.a), spec.b, spec.seed);
    case GeneratorSpec::Family::gnp:
      return random_gnp(static_cast<int>(spec.a), spec.p, spec.seed);
  }
  throw std::logic_error("unreachable");
}

// Optimum for generator families where it is analytic: K_k needs k-1
// vertices, K(m,n) needs min(m,n).
std::optional<int> generator_optimum(const GeneratorSpec& spec) {
  switch (spec.family) {
    case GeneratorSpec::Family::complete:
      return static_cast<int>(spec.a) - 1;
    case GeneratorSpec::Family::bipartite:
      return static_cast<int>(std::min(spec.a, spec.b));
    default:
      return std::nullopt;
  }
}

std::string format_fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

struct ReportRow {
  std::string fields[11];
};

ReportRow format_record(const BenchmarkRecord& r) {
  ReportRow row;
  row.fields[0] = r.instance;
  row.fields[1] = r.algorithm;
  row.fields[2] = std::to_string(r.n);
  row.fields[3] = std::to_string(r.m);
  row.fields[4] = std::to_string(r.cover_size);
  row.fields[5] = r.optimal ? std::to_string(*r.optimal) : "";
  row.fields[6] = r.ratio ? format_fixed(*r.ratio, 4) : "";
  row.fields[7] = format_fixed(static_cast<double>(r.elapsed.count()) / 1e6, 3);
  row.fields[8] = std::to_string(r.iterations);
  row.fields[9] = r.seed ? std::to_string(*r.seed) : "";
  row.fields[10] = r.valid ? "true" : "false";
  return row;
}

constexpr std::string_view kReportHeader[11] = {
    "instance", "algorithm", "n",          "m",    "cover_size", "optimal",
    "ratio",    "time_ms",   "iterations", "seed", "valid"};

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::nec: return "nec";
    case Algorithm::greedy: return "greedy";
    case Algorithm::match2: return "match2";
    case Algorithm::exact: return "exact";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "nec") return Algorithm::nec;
  if (name == "greedy") return Algorithm::greedy;
  if (name == "match2") return Algorithm::match2;
  if (name == "exact") return Algorithm::exact;
  return std::nullopt;
}

InstanceSpec InstanceSpec::parse(std::string_view text) {
  InstanceSpec spec;
  spec.text = std::string(text);
  if (text.starts_with("gen:")) {
    spec.kind = Kind::generator;
    parse_generator(spec.text.substr(4));  // validate now, fail early
  } else {
    spec.kind = Kind::file;
    if (text.empty()) throw ParseError("instance spec: empty");
  }
  return spec;
}

std::string InstanceSpec::display_name() const {
  if (kind == Kind::generator) return text;
  return canonical_instance_name(std::filesystem::path(text).stem().string());
}

Graph load_instance(const InstanceSpec& spec, std::optional<bool> complement_option,
                    std::vector<std::string>* warnings, bool* complemented_out) {
  Graph g;
  if (spec.kind == InstanceSpec::Kind::generator) {
    g = build_generator(parse_generator(spec.text.substr(4)));
  } else {
    std::ifstream in(spec.text);
    if (!in) {
      throw ParseError("cannot open instance file '" + spec.text + "'");
    }
    try {
      g = parse_dimacs(in, warnings);
    } catch (const ParseError& err) {
      throw ParseError(spec.text + ": " + err.what());
    }
  }
  const bool apply_complement =
      complement_option.value_or(spec.kind == InstanceSpec::Kind::file);
  if (apply_complement) g = complement(g);
  if (complemented_out) *complemented_out = apply_complement;
  return g;
}

BenchmarkRecord run_instance(const InstanceSpec& spec, Algorithm algo,
                             const RunOptions& options, const OptimaRegistry* registry,
                             Cover* cover_out) {
  bool complemented = false;
  const Graph g = load_instance(spec, options.complement, options.warning_sink, &complemented);

  BenchmarkRecord record;
  record.instance = spec.display_name();
  record.algorithm = std::string(algorithm_name(algo));
  record.n = g.vertex_count();
  record.m = g.edge_count();

  Cover cover;
  const auto start = Clock::now();
  switch (algo) {
    case Algorithm::nec: {
      NecResult result = nec_cover(g);
      record.elapsed = Clock::now() - start;
      record.iterations = result.stats.iterations;
      cover = std::move(result.cover);
      break;
    }
    case Algorithm::greedy: {
      cover = greedy_degree(g);
      record.elapsed = Clock::now() - start;
      record.iterations = cover.size();
      break;
    }
    case Algorithm::match2: {
      cover = matching_2approx(g, options.seed);
      record.elapsed = Clock::now() - start;
      record.iterations = cover.size() / 2;
      record.seed = options.seed;
      break;
    }
    case Algorithm::exact: {
      ExactStats stats;
      auto result = exact_mvc(g, options.exact_budget, &stats);
      record.elapsed = Clock::now() - start;
      record.iterations = static_cast<long long>(stats.nodes_expanded);
      if (!result) {
        throw std::runtime_error("exact search budget exhausted on '" + record.instance + "'");
      }
      cover = std::move(*result);
      break;
    }
  }
  record.cover_size = cover.size();
  record.valid = verify_cover(g, cover).valid;

  // The optimum applies only when it refers to the graph actually solved.
  std::optional<int> optimal;
  if (spec.kind == InstanceSpec::Kind::generator) {
    if (!complemented) optimal = generator_optimum(parse_generator(spec.text.substr(4)));
  } else if (registry != nullptr) {
    if (const KnownOptimum* row = registry->find(record.instance);
        row != nullptr && row->complemented == complemented) {
      optimal = row->optimal_cover;
    }
  }
  if (optimal) {
    record.optimal = optimal;
    record.ratio = selection_ratio(record.cover_size, *optimal);
  }
  if (cover_out) *cover_out = std::move(cover);
  return record;
}

bool SuiteResult::all_valid() const {
  return errors.empty() &&
         std::all_of(records.begin(), records.end(),
                     [](const BenchmarkRecord& r) { return r.valid; });
}

SuiteResult run_suite(std::span<const InstanceSpec> instances,
                      std::span<const Algorithm> algorithms, int repetitions,
                      const RunOptions& options, const OptimaRegistry* registry,
                      bool parallel, const RecordSink& sink) {
  if (instances.empty()) {
    throw std::invalid_argument("run_suite: empty manifest");
  }
  if (repetitions < 1) {
    throw std::invalid_argument("run_suite: repetitions must be at least 1");
  }
  struct Task {
    const InstanceSpec* spec;
    Algorithm algo;
  };
  std::vector<Task> tasks;
  tasks.reserve(instances.size() * algorithms.size() * static_cast<std::size_t>(repetitions));
  for (const InstanceSpec& spec : instances) {
    for (Algorithm algo : algorithms) {
      for (int rep = 0; rep < repetitions; ++rep) tasks.push_back({&spec, algo});
    }
  }

  std::vector<std::optional<BenchmarkRecord>> slots(tasks.size());
  std::vector<std::string> errors(tasks.size());

  auto run_task = [&](std::size_t i) {
    try {
      slots[i] = run_instance(*tasks[i].spec, tasks[i].algo, options, registry);
    } catch (const std::exception& err) {
      errors[i] = err.what();
    }
  };

  if (parallel) {
    std::atomic<std::size_t> next{0};
    const unsigned worker_count =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(tasks.size()));
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
          run_task(i);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      run_task(i);
      if (slots[i] && sink) sink(*slots[i]);
    }
  }

  SuiteResult result;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (slots[i]) {
      if (parallel && sink) sink(*slots[i]);
      result.records.push_back(std::move(*slots[i]));
    } else {
      result.errors.push_back(errors[i]);
    }
  }
  return result;
}

void emit_report_csv(std::span<const BenchmarkRecord> records, std::ostream& out) {
  for (std::size_t i = 0; i < 11; ++i) {
    if (i > 0) out << ',';
    out << kReportHeader[i];
  }
  out << '\n';
  for (const BenchmarkRecord& record : records) {
    const ReportRow row = format_record(record);
    for (std::size_t i = 0; i < 11; ++i) {
      if (i > 0) out << ',';
      out << row.fields[i];
    }
    out << '\n';
  }
}

void emit_report_markdown(std::span<const BenchmarkRecord> records, std::ostream& out) {
  out << '|';
  for (const auto& name : kReportHeader) out << ' ' << name << " |";
  out << "\n|";
  for (std::size_t i = 0; i < 11; ++i) out << "---|";
  out << '\n';
  for (const BenchmarkRecord& record : records) {
    const ReportRow row = format_record(record);
    out << '|';
    for (const auto& field : row.fields) out << ' ' << (field.empty() ? "-" : field) << " |";
    out << '\n';
  }
}

double fit_scaling(std::span<const BenchmarkRecord> records) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const BenchmarkRecord& record : records) {
    if (record.elapsed.count() <= 0 || record.n <= 0) continue;
    xs.push_back(std::log(static_cast<double>(record.n)));
    ys.push_back(std::log(static_cast<double>(record.elapsed.count())));
  }
  if (xs.size() < 4) {
    throw std::invalid_argument("fit_scaling: need at least 4 points with nonzero timings");
  }
  const double x_mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  const double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    numerator += (xs[i] - x_mean) * (ys[i] - y_mean);
    denominator += (xs[i] - x_mean) * (xs[i] - x_mean);
  }
  if (denominator == 0.0) {
    throw std::invalid_argument("fit_scaling: need at least two distinct sizes");
  }
  return numerator / denominator;
}

std::vector<BenchmarkRecord> measure_complete_ladder(std::span<const int> sizes,
                                                     int repetitions) {
  if (repetitions < 1) {
    throw std::invalid_argument("measure_complete_ladder: repetitions must be at least 1");
  }
  std::vector<BenchmarkRecord> ladder;
  ladder.reserve(sizes.size());
  for (int size : sizes) {
    const auto spec = InstanceSpec::parse("gen:complete:" + std::to_string(size));
    std::optional<BenchmarkRecord> fastest;
    for (int rep = 0; rep < repetitions; ++rep) {
      BenchmarkRecord record = run_instance(spec, Algorithm::nec);
      if (!fastest || record.elapsed < fastest->elapsed) fastest = std::move(record);
    }
    ladder.push_back(std::move(*fastest));
  }
  return ladder;
}

std::vector<InstanceSpec> read_manifest(std::istream& in) {
  std::vector<InstanceSpec> specs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t");
    const std::string trimmed = line.substr(begin, end - begin + 1);
    if (trimmed.front() == '#') continue;
    specs.push_back(InstanceSpec::parse(trimmed));
  }
  return specs;
}

}  // namespace mvc
