// Command-line front end: generate instances, run one algorithm, verify a
// tree, or sweep a benchmark grid into CSV.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "noisy/graph_io.hpp"
#include "noisy/harness.hpp"
#include "noisy/instances.hpp"

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <typename T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream is(item);
    T value{};
    if (!(is >> value) || !is.eof()) throw UsageError("bad list element '" + item + "'");
    out.push_back(value);
  }
  return out;
}

noisy::Instance instance_from_file(const noisy::GraphFile& file) {
  if (!file.realized) throw UsageError("graph file has no REALIZED section");
  return {file.graph, file.embedding, noisy::Realization(file.graph, *file.realized)};
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning trees under noisy edge queries"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string out_path;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance in graph text format");
  std::string family;
  std::uint32_t rows = 0, cols = 0, n = 0;
  std::string realize, mode;
  gen->add_option("--family", family, "grid | ladder | complete | star | tree")->required();
  gen->add_option("--rows", rows, "Grid rows");
  gen->add_option("--cols", cols, "Grid columns");
  gen->add_option("--n", n, "Ladder pairs, or vertex count for complete/star/tree");
  gen->add_option("--realize", realize, "random-tree | snake | full");
  gen->add_option("--mode", mode, "Ladder mode: two-sided-lb | fp-lb | full");
  gen->add_option("--seed", seed, "Seed for random realizations")->envname("NOISY_SEED");
  gen->add_option("--out", out_path, "Output path (default stdout)");

  // run
  auto* run = app.add_subcommand("run", "Run one algorithm on a graph file; prints a CSV row");
  std::string graph_path, algo_name, model_name;
  double p = 0.25;
  bool header = false;
  noisy::RunOptions options;
  std::uint64_t query_cap = 0;
  run->add_option("graph", graph_path, "Graph file with a REALIZED section")->required();
  run->add_option("--algo", algo_name,
                  "verify | naive_two_sided | solve_sparse_fn | naive_fn | combined_fn | "
                  "naive_fp | solve_planar_fp | combined_fp")
      ->required();
  run->add_option("--model", model_name, "two-sided | fn | fp")->required();
  run->add_option("--p", p, "Oracle error probability in [0, 1/2)");
  run->add_option("--seed", seed, "Oracle seed")->envname("NOISY_SEED");
  run->add_option("--eps", options.verify_epsilon, "verify: epsilon");
  run->add_option("--delta", options.verify_delta, "verify: delta");
  run->add_option("--query-cap", query_cap, "solve_planar_fp: stop after this many queries");
  run->add_flag("--header", header, "Print the CSV header first");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify connectivity of a tree in a graph file");
  std::string tree_list;
  double verify_p = 0.0;
  verify->add_option("graph", graph_path, "Graph file with a REALIZED section")->required();
  verify->add_option("--tree", tree_list,
                     "Comma-separated tree edge ids (default: the whole graph)");
  verify->add_option("--p", p, "Oracle error probability in [0, 1/2)");
  verify->add_option("--verify-p", verify_p, "Error probability the thresholds assume");
  verify->add_option("--eps", options.verify_epsilon, "Failure probability on connected trees");
  verify->add_option("--delta", options.verify_delta,
                     "Failure probability on disconnected trees");
  verify->add_option("--seed", seed, "Oracle seed")->envname("NOISY_SEED");

  // bench
  auto* bench = app.add_subcommand("bench", "Sweep sizes x algorithms x trials into CSV");
  std::string sizes_list, algos_list;
  std::uint32_t trials = 10;
  unsigned threads = 1;
  bench->add_option("--family", family, "grid | ladder | complete | star | tree")->required();
  bench->add_option("--sizes", sizes_list,
                    "Comma-separated sizes (grid: vertex counts, perfect squares)")
      ->required();
  bench->add_option("--trials", trials, "Trials per (size, algorithm)");
  bench->add_option("--algos", algos_list, "Comma-separated algorithm names")->required();
  bench->add_option("--model", model_name, "two-sided | fn | fp")->required();
  bench->add_option("--p", p, "Oracle error probability in [0, 1/2)");
  bench->add_option("--seed", seed, "Base seed; trial i uses seed + i")->envname("NOISY_SEED");
  bench->add_option("--realize", realize, "Realization mode override");
  bench->add_option("--threads", threads, "Worker threads");
  bench->add_flag("--timing", options.timing, "Fill the ms column (output is then not reproducible)");
  bench->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*gen) {
      std::string chosen = !mode.empty() ? mode : realize;
      noisy::InstanceSpec spec;
      spec.seed = seed;
      if (family == "grid") {
        if (rows == 0 || cols == 0) throw UsageError("grid needs --rows and --cols");
        spec.family = noisy::GridFamily{rows, cols};
      } else if (family == "ladder") {
        if (n == 0) throw UsageError("ladder needs --n");
        spec.family = noisy::LadderFamily{n};
        if (chosen.empty()) chosen = "two-sided-lb";
      } else if (family == "complete") {
        spec.family = noisy::CompleteFamily{n};
      } else if (family == "star") {
        spec.family = noisy::StarFamily{n};
      } else if (family == "tree") {
        spec.family = noisy::TreeFamily{n};
      } else {
        throw UsageError("unknown family '" + family + "'");
      }
      if (!std::holds_alternative<noisy::GridFamily>(spec.family) && n == 0)
        throw UsageError(family + " needs --n");
      spec.realization =
          chosen.empty() ? noisy::RealizationMode::RandomSpanningTree
                         : noisy::parse_realization_mode(chosen);
      noisy::Instance inst = noisy::generate(spec);
      noisy::GraphFile file{inst.graph, inst.embedding, inst.realization.realized()};
      emit(out_path, noisy::to_text(file));
      return 0;
    }

    if (*run) {
      noisy::GraphFile file = noisy::read_graph_file(graph_path);
      noisy::Instance inst = instance_from_file(file);
      noisy::ErrorModel model(noisy::parse_error_kind(model_name), p);
      if (query_cap > 0) options.planar_query_cap = query_cap;
      noisy::RunRecord record =
          noisy::run_once(inst, "file", noisy::parse_algorithm(algo_name), model, seed, options);
      if (header) std::cout << noisy::kCsvHeader << '\n';
      noisy::write_csv_row(std::cout, record);
      return 0;
    }

    if (*verify) {
      noisy::GraphFile file = noisy::read_graph_file(graph_path);
      noisy::Instance inst = instance_from_file(file);
      std::set<noisy::EdgeId> tree;
      if (tree_list.empty()) {
        for (noisy::EdgeId e : inst.graph.edge_ids()) tree.insert(e);
      } else {
        for (noisy::EdgeId e : parse_list<noisy::EdgeId>(tree_list)) {
          if (!inst.graph.has_edge(e)) throw UsageError("unknown tree edge " + std::to_string(e));
          tree.insert(e);
        }
      }
      std::vector<noisy::EdgeId> ids(tree.begin(), tree.end());
      noisy::MoldGraph tree_graph = inst.graph.edge_subgraph(ids);
      noisy::VerifyParams params{options.verify_epsilon, options.verify_delta,
                                 verify_p > 0.0 ? verify_p : (p > 0.0 ? p : 0.25)};
      noisy::NoisyOracle oracle(noisy::ErrorModel(noisy::ErrorKind::TwoSided, p),
                                inst.realization, seed);
      noisy::AlgoResult result = noisy::verify_tree(tree_graph, oracle, params);
      bool truth = true;
      for (noisy::EdgeId e : ids) truth = truth && inst.realization.is_realized(e);
      auto limits = noisy::threshold_and_budget(params, std::max<std::size_t>(1, ids.size()));
      std::cout << "verdict=" << (result.verdict() ? "connected" : "disconnected")
                << " truth=" << (truth ? "connected" : "disconnected")
                << " queries=" << result.queries_used << " threshold=" << limits.threshold
                << " budget=" << limits.budget << '\n';
      return 0;
    }

    if (*bench) {
      noisy::BenchConfig config;
      config.family = family;
      config.sizes = parse_list<std::uint32_t>(sizes_list);
      config.trials = trials;
      for (const std::string& name : parse_list<std::string>(algos_list))
        config.algos.push_back(noisy::parse_algorithm(name));
      config.model = noisy::parse_error_kind(model_name);
      config.p = p;
      config.base_seed = seed;
      if (!realize.empty()) config.realization = noisy::parse_realization_mode(realize);
      config.threads = threads;
      config.options = options;
      std::ostringstream csv;
      noisy::write_bench_csv(csv, noisy::run_bench(config));
      emit(out_path, csv.str());
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
