#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "noisy/harness.hpp"

namespace noisy {
namespace {

std::string row(const RunRecord& r) {
  std::ostringstream out;
  write_csv_row(out, r);
  return out.str();
}

TEST(Algorithm, NamesRoundTripAndModels) {
  for (Algorithm a : {Algorithm::Verify, Algorithm::NaiveTwoSided, Algorithm::SolveSparseFn,
                      Algorithm::NaiveFn, Algorithm::CombinedFn, Algorithm::NaiveFp,
                      Algorithm::SolvePlanarFp, Algorithm::CombinedFp})
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  EXPECT_THROW(parse_algorithm("dijkstra"), std::invalid_argument);
  EXPECT_EQ(required_model(Algorithm::Verify), ErrorKind::TwoSided);
  EXPECT_EQ(required_model(Algorithm::CombinedFn), ErrorKind::FalseNegative);
  EXPECT_EQ(required_model(Algorithm::SolvePlanarFp), ErrorKind::FalsePositive);
}

TEST(RunOnce, RejectsModelMismatch) {
  Instance grid = gen_grid(3, 3, RealizationMode::RandomSpanningTree, 0);
  EXPECT_THROW(run_once(grid, "grid", Algorithm::NaiveFp, {ErrorKind::FalseNegative, 0.1}, 1),
               std::invalid_argument);
}

TEST(RunOnce, NoiselessSparseFnOnGrid) {
  Instance grid = gen_grid(3, 3, RealizationMode::RandomSpanningTree, 4);
  RunRecord a = run_once(grid, "grid", Algorithm::SolveSparseFn, {ErrorKind::FalseNegative, 0.0}, 1);
  RunRecord b = run_once(grid, "grid", Algorithm::SolveSparseFn, {ErrorKind::FalseNegative, 0.0}, 2);
  EXPECT_TRUE(a.success);
  EXPECT_EQ(a.queries, b.queries);
  EXPECT_GE(a.queries, 8u);
  EXPECT_LE(a.queries, 12u + 8u);
}

TEST(RunOnce, VerifyOnConnectedTreeUsesThresholdPerEdge) {
  Instance tree = gen_random_tree(21, 3);
  RunRecord r = run_once(tree, "tree", Algorithm::Verify, {ErrorKind::TwoSided, 0.0}, 1);
  EXPECT_TRUE(r.success);
  // Default thresholds assume p = 0.25 with delta = 0.1: c = ceil(log_3 10) = 3.
  EXPECT_EQ(r.queries, 3u * 20u);
}

TEST(RunOnce, VerifyJudgesAgainstTheRealization) {
  Instance grid = gen_grid(3, 3, RealizationMode::SnakePath, 0);
  RunOptions opts;
  opts.verify_tree_edges = std::set<EdgeId>{0, 1, 2, 3, 4, 5, 6, 9};  // 6 not realized
  RunRecord r = run_once(grid, "grid", Algorithm::Verify, {ErrorKind::TwoSided, 0.0}, 1, opts);
  EXPECT_TRUE(r.success);  // verdict "disconnected" matches the truth
  EXPECT_EQ(r.queries, threshold_and_budget({0.1, 0.1, 0.25}, 8).budget);
}

TEST(RunOnce, NaiveFpQueryCountIsFixed) {
  Instance grid = gen_grid(3, 4, RealizationMode::RandomSpanningTree, 2);
  RunRecord r = run_once(grid, "grid", Algorithm::NaiveFp, {ErrorKind::FalsePositive, 0.25}, 7);
  EXPECT_EQ(r.queries, 17u * fp_repetitions(17));
}

TEST(RunOnce, EveryAlgorithmRunsOnAMatchingInstance) {
  Instance grid = gen_grid(4, 4, RealizationMode::RandomSpanningTree, 1);
  Instance tree = gen_random_tree(10, 1);
  for (Algorithm a : {Algorithm::NaiveTwoSided, Algorithm::SolveSparseFn, Algorithm::NaiveFn,
                      Algorithm::CombinedFn, Algorithm::NaiveFp, Algorithm::SolvePlanarFp,
                      Algorithm::CombinedFp}) {
    RunRecord r = run_once(grid, "grid", a, {required_model(a), 0.0}, 3);
    EXPECT_TRUE(r.success) << to_string(a);
    EXPECT_EQ(r.ms, 0.0);
  }
  EXPECT_TRUE(run_once(tree, "tree", Algorithm::Verify, {ErrorKind::TwoSided, 0.0}, 3).success);
}

TEST(RunOnce, PlanarFpNeedsAnEmbedding) {
  Instance k4 = gen_complete(4, RealizationMode::RandomSpanningTree, 0);
  EXPECT_THROW(run_once(k4, "complete", Algorithm::SolvePlanarFp,
                        {ErrorKind::FalsePositive, 0.1}, 1),
               std::invalid_argument);
  EXPECT_TRUE(run_once(k4, "complete", Algorithm::CombinedFp, {ErrorKind::FalsePositive, 0.0}, 1)
                  .success);
}

TEST(RunOnce, PlanarFpOnCyclicRealizationFailsAfterTheCap) {
  Instance grid = gen_grid(3, 3, RealizationMode::Full, 0);
  RunOptions opts;
  opts.planar_query_cap = 300;
  RunRecord r =
      run_once(grid, "grid", Algorithm::SolvePlanarFp, {ErrorKind::FalsePositive, 0.2}, 1, opts);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.queries, 300u);
}

TEST(CsvRow, Format) {
  RunRecord r;
  r.family = "grid";
  r.n = 9;
  r.m = 12;
  r.algo = Algorithm::NaiveFp;
  r.model = ErrorKind::FalsePositive;
  r.p = 0.25;
  r.seed = 3;
  r.queries = 96;
  r.success = true;
  EXPECT_EQ(row(r), "grid,9,12,naive_fp,fp,0.25,3,96,true,0.000\n");
}

BenchConfig small_bench(unsigned threads) {
  BenchConfig c;
  c.family = "grid";
  c.sizes = {9, 16};
  c.trials = 5;
  c.algos = {Algorithm::SolveSparseFn, Algorithm::NaiveFn, Algorithm::CombinedFn};
  c.model = ErrorKind::FalseNegative;
  c.p = 0.25;
  c.base_seed = 40;
  c.threads = threads;
  return c;
}

TEST(Bench, RowsFollowSizeAlgoTrialOrderWithDerivedSeeds) {
  BenchReport rep = run_bench(small_bench(1));
  ASSERT_EQ(rep.rows.size(), 2u * 3u * 5u);
  EXPECT_EQ(rep.rows[0].n, 9u);
  EXPECT_EQ(rep.rows[0].seed, 40u);
  EXPECT_EQ(rep.rows[4].seed, 44u);
  EXPECT_EQ(rep.rows[5].algo, Algorithm::NaiveFn);
  EXPECT_EQ(rep.rows[15].n, 16u);
  for (const RunRecord& r : rep.rows) EXPECT_TRUE(r.success);
}

TEST(Bench, OutputIsIndependentOfThreadCount) {
  std::ostringstream one, many;
  write_bench_csv(one, run_bench(small_bench(1)));
  write_bench_csv(many, run_bench(small_bench(4)));
  EXPECT_EQ(one.str(), many.str());
}

TEST(Bench, SummaryMatchesRows) {
  BenchReport rep = run_bench(small_bench(2));
  ASSERT_EQ(rep.summary.size(), 6u);
  for (std::size_t cell = 0; cell < rep.summary.size(); ++cell) {
    double sum = 0, sq = 0;
    for (std::size_t i = 0; i < 5; ++i) sum += rep.rows[cell * 5 + i].queries;
    const double mean = sum / 5;
    for (std::size_t i = 0; i < 5; ++i) sq += std::pow(rep.rows[cell * 5 + i].queries - mean, 2);
    EXPECT_DOUBLE_EQ(rep.summary[cell].mean_queries, mean);
    EXPECT_NEAR(rep.summary[cell].stddev_queries, std::sqrt(sq / 4), 1e-9);
    EXPECT_EQ(rep.summary[cell].success_rate, 1.0);
  }
}

TEST(Bench, CsvLayout) {
  std::ostringstream out;
  write_bench_csv(out, run_bench(small_bench(1)));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kCsvHeader);
  int rows = 0;
  while (std::getline(in, line) && !line.empty()) ++rows;
  EXPECT_EQ(rows, 30);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("family,n,m,algo,model,p,trials,mean_queries", 0), 0u);
  int summaries = 0;
  while (std::getline(in, line)) ++summaries;
  EXPECT_EQ(summaries, 6);
}

TEST(Bench, RejectsBadSweeps) {
  BenchConfig c = small_bench(1);
  c.sizes = {10};
  EXPECT_THROW(run_bench(c), std::invalid_argument);
  c = small_bench(1);
  c.algos = {Algorithm::NaiveFp};
  EXPECT_THROW(run_bench(c), std::invalid_argument);
  c = small_bench(1);
  c.family = "hypercube";
  EXPECT_THROW(run_bench(c), std::invalid_argument);
}

}  // namespace
}  // namespace noisy
