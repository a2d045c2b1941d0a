#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "semistream/graph.hpp"
#include "semistream/stream.hpp"

namespace semistream {

/// One instance source: a graph file or a seeded generator (expanded to
/// `count` instances with consecutive derived seeds).
struct InstanceSpec {
  std::string file;  // non-empty -> file source

  std::string kind;  // complete | random | hard_g1 | matching_g2
  int n = 0;
  int m = 0;
  double p = 0.0;
  int c = 1;
  double eps = 0.0;
  std::uint64_t seed = 0;
  int count = 1;
  bool patch_isolated = false;  // add one seeded edge to isolated A vertices
  std::vector<int> subset;      // matching_g2 only
};

struct AlgorithmSpec {
  std::string name;  // onepass | multipass | greedy | optimal | semi2 | incomplete | asemi
  double eps = 0.0;
  long long s = 0;
  int d = 1;
  int p = 1;
};

struct OrderSpec {
  StreamOrder policy = StreamOrder::AsGiven;
  std::uint64_t seed = 0;
};

/// Fully deterministic experiment description. Timing is excluded from the
/// emitted documents unless include_timing is set, keeping identical specs
/// byte-identical end to end.
struct ExperimentSpec {
  int schema = 1;
  std::vector<InstanceSpec> instances;
  std::vector<AlgorithmSpec> algorithms;
  std::vector<OrderSpec> orders;
  int repetitions = 1;
  bool include_timing = false;
};

/// Parses and validates; error messages carry JSON field paths.
ExperimentSpec parse_experiment_spec(const nlohmann::json& doc);
ExperimentSpec parse_experiment_spec_file(const std::string& path);

struct ResultRecord {
  int schema = 1;
  std::string instance;
  std::string algorithm;
  std::string order;
  int rep = 0;
  int n = 0;
  int m = 0;
  int num_edges = 0;
  int degmax = 0;
  int size = 0;
  bool complete = false;
  int d_star = -1;      // -1: instance beyond the exact-solver guard
  double ratio = 0.0;   // degmax / d_star; meaningless when d_star < 0
  double bound = 0.0;   // theoretical degmax bound, when known
  bool bound_known = false;
  bool bound_ok = true;
  std::size_t peak_edges = 0;
  int passes = 0;
  double wall_ms = 0.0;
};

/// Runs instance x algorithm x order x repetition in a worker pool; records
/// come back in spec order regardless of completion order. d* is computed
/// exactly for n <= 2000 (and cross-checked against the brute-force oracle
/// for n <= 8); beyond the guard d_star stays -1 and ratio is omitted.
std::vector<ResultRecord> run_experiment(const ExperimentSpec& spec);

enum class OutputFormat { JsonLines, Csv };
OutputFormat parse_output_format(std::string_view name);

/// Stable field order, full precision, deterministic for identical records.
std::string emit(std::span<const ResultRecord> records, OutputFormat format,
                 bool include_timing = false);

/// True when every record with a known bound satisfies it (CLI exit gate).
bool all_bounds_ok(std::span<const ResultRecord> records);

}  // namespace semistream
