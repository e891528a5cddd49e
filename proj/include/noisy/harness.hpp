#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "noisy/algorithms.hpp"
#include "noisy/instances.hpp"
#include "noisy/oracle.hpp"

namespace noisy {

enum class Algorithm {
  Verify,
  NaiveTwoSided,
  SolveSparseFn,
  NaiveFn,
  CombinedFn,
  NaiveFp,
  SolvePlanarFp,
  CombinedFp,
};

std::string_view to_string(Algorithm algo);
Algorithm parse_algorithm(std::string_view name);
/// The only error model each algorithm accepts.
ErrorKind required_model(Algorithm algo);

struct RunOptions {
  double verify_epsilon = 0.1;
  double verify_delta = 0.1;
  /// Error probability the verification thresholds are tuned for. Defaults to
  /// the oracle's p, or 0.25 when the oracle is noiseless.
  std::optional<double> verify_p;
  /// Tree to verify; defaults to the whole moldgraph, which must then be a tree.
  std::optional<std::set<EdgeId>> verify_tree_edges;
  /// Query cap for solve_planar_fp runs; defaults to 100 * m * max(1, ceil(log2 m^2)).
  std::optional<std::uint64_t> planar_query_cap;
  bool timing = false;
};

/// CSV columns: family,n,m,algo,model,p,seed,queries,success,ms
struct RunRecord {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  Algorithm algo = Algorithm::Verify;
  ErrorKind model = ErrorKind::TwoSided;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t queries = 0;
  bool success = false;
  double ms = 0.0;
};

inline constexpr std::string_view kCsvHeader = "family,n,m,algo,model,p,seed,queries,success,ms";

/// One deterministic run. success is recomputed from the realization: a
/// spanning tree of the moldgraph made only of realized edges, or for
/// verification a verdict matching whether every tree edge is realized.
/// Throws std::invalid_argument on an algorithm/model mismatch.
RunRecord run_once(const Instance& instance, std::string family, Algorithm algo,
                   const ErrorModel& model, std::uint64_t seed, const RunOptions& options = {});

void write_csv_row(std::ostream& out, const RunRecord& record);

struct BenchConfig {
  std::string family;
  std::vector<std::uint32_t> sizes;
  std::uint32_t trials = 1;
  std::vector<Algorithm> algos;
  ErrorKind model = ErrorKind::FalseNegative;
  double p = 0.25;
  std::uint64_t base_seed = 0;
  std::optional<RealizationMode> realization;
  unsigned threads = 1;
  RunOptions options;
};

struct BenchSummary {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  Algorithm algo = Algorithm::Verify;
  ErrorKind model = ErrorKind::TwoSided;
  double p = 0.0;
  std::uint32_t trials = 0;
  double mean_queries = 0.0;
  double stddev_queries = 0.0;
  double success_rate = 0.0;
};

struct BenchReport {
  std::vector<RunRecord> rows;
  std::vector<BenchSummary> summary;
};

/// Instance for one (family, size, seed) cell. Grid sizes are vertex counts
/// and must be perfect squares; ladder sizes count parallel pairs.
InstanceSpec bench_instance_spec(std::string_view family, std::uint32_t size,
                                 std::optional<RealizationMode> realization, std::uint64_t seed);

/// Rows ordered by (size, algo, trial); trial i uses seed base_seed + i for
/// both the instance and the oracle. Trials may run on several threads;
/// the output does not depend on the thread count.
BenchReport run_bench(const BenchConfig& config);

/// Trial rows, a blank line, then the summary table.
void write_bench_csv(std::ostream& out, const BenchReport& report);

}  // namespace noisy
