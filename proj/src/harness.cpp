#include "noisy/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace noisy {
namespace {

bool realized_spanning_tree(const Instance& instance, const AlgoResult& result) {
  if (result.status != RunStatus::Complete) return false;
  const auto& tree = result.tree();
  if (!is_spanning_tree(instance.graph, tree)) return false;
  for (EdgeId e : tree)
    if (!instance.realization.is_realized(e)) return false;
  return true;
}

std::uint64_t default_planar_cap(std::size_t m) {
  return 100 * std::max<std::uint64_t>(1, m) * std::max<std::uint64_t>(1, fp_repetitions(m));
}

struct Outcome {
  std::uint64_t queries;
  bool success;
};

Outcome dispatch(const Instance& instance, Algorithm algo, NoisyOracle& oracle,
                 const RunOptions& options) {
  const MoldGraph& g = instance.graph;
  switch (algo) {
    case Algorithm::Verify: {
      std::set<EdgeId> tree_edges;
      if (options.verify_tree_edges) {
        tree_edges = *options.verify_tree_edges;
      } else {
        auto ids = g.edge_ids();
        tree_edges.insert(ids.begin(), ids.end());
      }
      std::vector<EdgeId> ids(tree_edges.begin(), tree_edges.end());
      MoldGraph tree = g.edge_subgraph(ids);
      double p = options.verify_p.value_or(oracle.model().p() > 0.0 ? oracle.model().p() : 0.25);
      AlgoResult r = verify_tree(tree, oracle, {options.verify_epsilon, options.verify_delta, p});
      bool truth = std::all_of(ids.begin(), ids.end(),
                               [&](EdgeId e) { return instance.realization.is_realized(e); });
      return {r.queries_used, r.verdict() == truth};
    }
    case Algorithm::NaiveTwoSided: {
      AlgoResult r = naive_two_sided(g, oracle);
      return {r.queries_used, realized_spanning_tree(instance, r)};
    }
    case Algorithm::SolveSparseFn: {
      AlgoResult r = solve_sparse_fn(g, oracle);
      return {r.queries_used, realized_spanning_tree(instance, r)};
    }
    case Algorithm::NaiveFn: {
      AlgoResult r = naive_fn(g, oracle);
      return {r.queries_used, realized_spanning_tree(instance, r)};
    }
    case Algorithm::CombinedFn: {
      InterleaveResult r = combined_fn(g, oracle);
      return {r.result.queries_used, realized_spanning_tree(instance, r.result)};
    }
    case Algorithm::NaiveFp: {
      AlgoResult r = naive_fp(g, oracle);
      return {r.queries_used, realized_spanning_tree(instance, r)};
    }
    case Algorithm::SolvePlanarFp: {
      if (!instance.embedding) throw std::invalid_argument("solve_planar_fp needs an embedding");
      AlgoResult r = solve_planar_fp(g, *instance.embedding, oracle,
                                     options.planar_query_cap.value_or(default_planar_cap(g.edge_count())));
      return {r.queries_used, realized_spanning_tree(instance, r)};
    }
    case Algorithm::CombinedFp: {
      InterleaveResult r = combined_fp(g, instance.embedding, oracle);
      return {r.result.queries_used, realized_spanning_tree(instance, r.result)};
    }
  }
  throw std::logic_error("unhandled algorithm");
}

std::string format_double(double x) {
  std::ostringstream ss;
  ss << std::setprecision(6) << x;
  return ss.str();
}

}  // namespace

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::Verify: return "verify";
    case Algorithm::NaiveTwoSided: return "naive_two_sided";
    case Algorithm::SolveSparseFn: return "solve_sparse_fn";
    case Algorithm::NaiveFn: return "naive_fn";
    case Algorithm::CombinedFn: return "combined_fn";
    case Algorithm::NaiveFp: return "naive_fp";
    case Algorithm::SolvePlanarFp: return "solve_planar_fp";
    case Algorithm::CombinedFp: return "combined_fp";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Verify, Algorithm::NaiveTwoSided, Algorithm::SolveSparseFn,
                      Algorithm::NaiveFn, Algorithm::CombinedFn, Algorithm::NaiveFp,
                      Algorithm::SolvePlanarFp, Algorithm::CombinedFp})
    if (to_string(a) == name) return a;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

ErrorKind required_model(Algorithm algo) {
  switch (algo) {
    case Algorithm::Verify:
    case Algorithm::NaiveTwoSided: return ErrorKind::TwoSided;
    case Algorithm::SolveSparseFn:
    case Algorithm::NaiveFn:
    case Algorithm::CombinedFn: return ErrorKind::FalseNegative;
    case Algorithm::NaiveFp:
    case Algorithm::SolvePlanarFp:
    case Algorithm::CombinedFp: return ErrorKind::FalsePositive;
  }
  throw std::logic_error("unhandled algorithm");
}

RunRecord run_once(const Instance& instance, std::string family, Algorithm algo,
                   const ErrorModel& model, std::uint64_t seed, const RunOptions& options) {
  if (required_model(algo) != model.kind())
    throw std::invalid_argument(std::string(to_string(algo)) + " requires the " +
                                std::string(to_string(required_model(algo))) + " model, not " +
                                std::string(to_string(model.kind())));
  NoisyOracle oracle(model, instance.realization, seed);

  const auto begin = std::chrono::steady_clock::now();
  Outcome outcome = dispatch(instance, algo, oracle, options);
  const auto end = std::chrono::steady_clock::now();

  if (outcome.queries != oracle.total_queries())
    throw std::logic_error("query accounting mismatch between algorithm and oracle");

  RunRecord record;
  record.family = std::move(family);
  record.n = instance.graph.vertex_count();
  record.m = instance.graph.edge_count();
  record.algo = algo;
  record.model = model.kind();
  record.p = model.p();
  record.seed = seed;
  record.queries = outcome.queries;
  record.success = outcome.success;
  record.ms =
      options.timing ? std::chrono::duration<double, std::milli>(end - begin).count() : 0.0;
  return record;
}

void write_csv_row(std::ostream& out, const RunRecord& r) {
  out << r.family << ',' << r.n << ',' << r.m << ',' << to_string(r.algo) << ','
      << to_string(r.model) << ',' << format_double(r.p) << ',' << r.seed << ',' << r.queries
      << ',' << (r.success ? "true" : "false") << ',' << std::fixed << std::setprecision(3)
      << r.ms << std::defaultfloat << '\n';
}

InstanceSpec bench_instance_spec(std::string_view family, std::uint32_t size,
                                 std::optional<RealizationMode> realization, std::uint64_t seed) {
  InstanceSpec spec;
  spec.seed = seed;
  if (family == "grid") {
    auto side = static_cast<std::uint32_t>(std::llround(std::sqrt(static_cast<double>(size))));
    if (side * side != size) throw std::invalid_argument("grid sizes must be perfect squares");
    spec.family = GridFamily{side, side};
    spec.realization = realization.value_or(RealizationMode::RandomSpanningTree);
  } else if (family == "ladder") {
    spec.family = LadderFamily{size};
    spec.realization = realization.value_or(RealizationMode::LadderAlternating);
  } else if (family == "complete") {
    spec.family = CompleteFamily{size};
    spec.realization = realization.value_or(RealizationMode::RandomSpanningTree);
  } else if (family == "star") {
    spec.family = StarFamily{size};
    spec.realization = RealizationMode::Full;
  } else if (family == "tree") {
    spec.family = TreeFamily{size};
    spec.realization = RealizationMode::Full;
  } else {
    throw std::invalid_argument("unknown family '" + std::string(family) + "'");
  }
  return spec;
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("bench needs at least one trial");
  if (config.sizes.empty() || config.algos.empty())
    throw std::invalid_argument("bench needs at least one size and one algorithm");
  const ErrorModel model(config.model, config.p);
  for (Algorithm a : config.algos)
    if (required_model(a) != config.model)
      throw std::invalid_argument(std::string(to_string(a)) + " is incompatible with model " +
                                  std::string(to_string(config.model)));

  struct Task {
    std::uint32_t size;
    Algorithm algo;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::uint32_t size : config.sizes)
    for (Algorithm algo : config.algos)
      for (std::uint32_t t = 0; t < config.trials; ++t)
        tasks.push_back({size, algo, config.base_seed + t});
  // Validate every cell up front so workers cannot fail on a bad size.
  for (std::uint32_t size : config.sizes)
    bench_instance_spec(config.family, size, config.realization, config.base_seed);

  BenchReport report;
  report.rows.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const Task& task = tasks[i];
        Instance instance =
            generate(bench_instance_spec(config.family, task.size, config.realization, task.seed));
        report.rows[i] =
            run_once(instance, config.family, task.algo, model, task.seed, config.options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t begin = 0; begin < report.rows.size(); begin += config.trials) {
    BenchSummary s;
    const RunRecord& first = report.rows[begin];
    s.family = first.family;
    s.n = first.n;
    s.m = first.m;
    s.algo = first.algo;
    s.model = first.model;
    s.p = first.p;
    s.trials = config.trials;
    double sum = 0.0;
    double successes = 0.0;
    for (std::size_t i = begin; i < begin + config.trials; ++i) {
      sum += static_cast<double>(report.rows[i].queries);
      successes += report.rows[i].success ? 1.0 : 0.0;
    }
    s.mean_queries = sum / config.trials;
    double sq = 0.0;
    for (std::size_t i = begin; i < begin + config.trials; ++i) {
      const double d = static_cast<double>(report.rows[i].queries) - s.mean_queries;
      sq += d * d;
    }
    s.stddev_queries = config.trials > 1 ? std::sqrt(sq / (config.trials - 1)) : 0.0;
    s.success_rate = successes / config.trials;
    report.summary.push_back(std::move(s));
  }
  return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << kCsvHeader << '\n';
  for (const RunRecord& r : report.rows) write_csv_row(out, r);
  out << '\n'
      << "family,n,m,algo,model,p,trials,mean_queries,stddev_queries,success_rate,"
         "queries_per_m,queries_per_m_ln_n,queries_per_n_ln_n\n";
  for (const BenchSummary& s : report.summary) {
    const double m = static_cast<double>(s.m);
    const double n = static_cast<double>(s.n);
    const double ln_n = std::log(n);
    auto ratio = [](double num, double den) { return den > 0.0 ? format_double(num / den) : ""; };
    out << s.family << ',' << s.n << ',' << s.m << ',' << to_string(s.algo) << ','
        << to_string(s.model) << ',' << format_double(s.p) << ',' << s.trials << ','
        << format_double(s.mean_queries) << ',' << format_double(s.stddev_queries) << ','
        << format_double(s.success_rate) << ',' << ratio(s.mean_queries, m) << ','
        << ratio(s.mean_queries, m * ln_n) << ',' << ratio(s.mean_queries, n * ln_n) << '\n';
  }
}

}  // namespace noisy
