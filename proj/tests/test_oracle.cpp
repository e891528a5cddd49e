#include <gtest/gtest.h>

#include <cmath>

#include "noisy/oracle.hpp"
#include "test_support.hpp"

namespace noisy {
namespace {

// Edge 0 realized, edge 1 not; a path 0-1 plus a parallel edge.
struct TwoEdges {
  MoldGraph graph{2, std::vector<Edge>{{0, 0, 1}, {1, 0, 1}}};
  Realization realization{graph, {0}};
};

double yes_rate(EdgeOracle& o, EdgeId e, int n) {
  int yes = 0;
  for (int i = 0; i < n; ++i) yes += o.query(e) == Answer::Yes;
  return static_cast<double>(yes) / n;
}

void expect_rate(double observed, double expected, int n) {
  const double sigma = std::sqrt(std::max(expected * (1 - expected), 1e-12) / n);
  EXPECT_NEAR(observed, expected, 3 * sigma + 1e-12);
}

TEST(ErrorModel, RejectsProbabilitiesOutsideRange) {
  EXPECT_NO_THROW(ErrorModel(ErrorKind::TwoSided, 0.0));
  EXPECT_NO_THROW(ErrorModel(ErrorKind::TwoSided, 0.49));
  EXPECT_THROW(ErrorModel(ErrorKind::TwoSided, 0.5), std::invalid_argument);
  EXPECT_THROW(ErrorModel(ErrorKind::FalsePositive, -0.1), std::invalid_argument);
}

TEST(ErrorModel, Names) {
  for (ErrorKind k : {ErrorKind::TwoSided, ErrorKind::FalseNegative, ErrorKind::FalsePositive})
    EXPECT_EQ(parse_error_kind(to_string(k)), k);
  EXPECT_THROW(parse_error_kind("three-sided"), std::invalid_argument);
}

TEST(NoisyOracle, OneSidedModelsAreCertainOnOneClass) {
  TwoEdges t;
  NoisyOracle fn({ErrorKind::FalseNegative, 0.45}, t.realization, 1);
  NoisyOracle fp({ErrorKind::FalsePositive, 0.45}, t.realization, 1);
  for (int i = 0; i < 2000; ++i) {
    EXPECT_EQ(fn.query(1), Answer::No);
    EXPECT_EQ(fp.query(0), Answer::Yes);
  }
}

TEST(NoisyOracle, NoiselessTwoSidedTellsTheTruth) {
  TwoEdges t;
  NoisyOracle o({ErrorKind::TwoSided, 0.0}, t.realization, 3);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(o.query(0), Answer::Yes);
    EXPECT_EQ(o.query(1), Answer::No);
  }
}

TEST(NoisyOracle, FrequenciesMatchModelWithinThreeSigma) {
  constexpr int kN = 10000;
  TwoEdges t;
  for (double p : {0.1, 0.25, 0.4}) {
    struct Cell {
      ErrorKind kind;
      EdgeId edge;
      double yes;
    };
    const Cell cells[] = {
        {ErrorKind::TwoSided, 0, 1 - p},      {ErrorKind::TwoSided, 1, p},
        {ErrorKind::FalseNegative, 0, 1 - p}, {ErrorKind::FalseNegative, 1, 0.0},
        {ErrorKind::FalsePositive, 0, 1.0},   {ErrorKind::FalsePositive, 1, p},
    };
    std::uint64_t seed = 1000;
    for (const Cell& c : cells) {
      NoisyOracle o({c.kind, p}, t.realization, seed++);
      expect_rate(yes_rate(o, c.edge, kN), c.yes, kN);
    }
  }
}

TEST(NoisyOracle, SameSeedSameAnswers) {
  TwoEdges t;
  NoisyOracle a({ErrorKind::TwoSided, 0.3}, t.realization, 42);
  NoisyOracle b({ErrorKind::TwoSided, 0.3}, t.realization, 42);
  NoisyOracle c({ErrorKind::TwoSided, 0.3}, t.realization, 43);
  int differ = 0;
  for (int i = 0; i < 500; ++i) {
    const EdgeId e = static_cast<EdgeId>(i % 2);
    const Answer x = a.query(e);
    EXPECT_EQ(x, b.query(e));
    differ += x != c.query(e);
  }
  EXPECT_GT(differ, 0);
}

TEST(NoisyOracle, ModelsConsumeRandomnessIdentically) {
  // With one draw per query, a shared seed gives the same noise sequence, so
  // models that agree on an edge class agree answer for answer.
  TwoEdges t;
  NoisyOracle two({ErrorKind::TwoSided, 0.3}, t.realization, 8);
  NoisyOracle fn({ErrorKind::FalseNegative, 0.3}, t.realization, 8);
  NoisyOracle fp({ErrorKind::FalsePositive, 0.3}, t.realization, 8);
  for (int i = 0; i < 1000; ++i) {
    const EdgeId e = static_cast<EdgeId>((i * 7) % 3 == 0);
    const Answer a2 = two.query(e), an = fn.query(e), ap = fp.query(e);
    if (e == 0) EXPECT_EQ(a2, an);
    if (e == 1) EXPECT_EQ(a2, ap);
  }
}

TEST(NoisyOracle, StatsCountEveryQuery) {
  TwoEdges t;
  NoisyOracle o({ErrorKind::TwoSided, 0.2}, t.realization, 0);
  QueryStats fresh = o.stats();
  EXPECT_EQ(fresh.total, 0u);
  EXPECT_TRUE(fresh.per_edge.empty());
  for (int i = 0; i < 7; ++i) o.query(1);
  QueryStats s = o.stats();
  EXPECT_EQ(s.total, 7u);
  EXPECT_EQ(s.per_edge, (std::map<EdgeId, std::uint64_t>{{1, 7}}));
  o.query(0);
  std::uint64_t sum = 0;
  for (const auto& [e, k] : o.stats().per_edge) sum += k;
  EXPECT_EQ(sum, o.total_queries());
}

TEST(NoisyOracle, UnknownEdgeIsRejectedAndNotCharged) {
  TwoEdges t;
  NoisyOracle o({ErrorKind::TwoSided, 0.2}, t.realization, 0);
  EXPECT_THROW(o.query(5), std::out_of_range);
  EXPECT_EQ(o.total_queries(), 0u);
}

TEST(NoisyOracle, ForksShareTheLedgerButNotTheStream) {
  TwoEdges t;
  NoisyOracle root({ErrorKind::TwoSided, 0.3}, t.realization, 11);
  NoisyOracle a = root.fork(1);
  NoisyOracle a_again = root.fork(1);
  NoisyOracle b = root.fork(2);
  int differ = 0;
  for (int i = 0; i < 300; ++i) {
    const Answer x = a.query(0);
    EXPECT_EQ(x, a_again.query(0));
    differ += x != b.query(0);
  }
  EXPECT_GT(differ, 0);
  EXPECT_EQ(root.total_queries(), 900u);
  EXPECT_EQ(a.total_queries(), 900u);
}

TEST(InvertedOracle, NegatesAndStillCharges) {
  TwoEdges t;
  NoisyOracle fp({ErrorKind::FalsePositive, 0.25}, t.realization, 5);
  InvertedOracle inv = invert(fp);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(inv.query(0), Answer::No);
  EXPECT_EQ(fp.total_queries(), 1000u);
}

TEST(InvertedOracle, InvertedFpIsFnForNonRealizedEdges) {
  constexpr int kN = 10000;
  TwoEdges t;
  NoisyOracle fp({ErrorKind::FalsePositive, 0.25}, t.realization, 6);
  InvertedOracle inv(fp);
  expect_rate(yes_rate(inv, 1, kN), 0.75, kN);
  expect_rate(yes_rate(inv, 0, kN), 0.0, kN);
}

TEST(InvertedOracle, DoubleInversionIsTheOriginal) {
  TwoEdges t;
  NoisyOracle a({ErrorKind::TwoSided, 0.3}, t.realization, 9);
  NoisyOracle b({ErrorKind::TwoSided, 0.3}, t.realization, 9);
  InvertedOracle once(b);
  InvertedOracle twice(static_cast<EdgeOracle&>(once));
  for (int i = 0; i < 500; ++i) EXPECT_EQ(a.query(i % 2), twice.query(i % 2));
}

TEST(MappedOracle, TranslatesIds) {
  TwoEdges t;
  NoisyOracle o({ErrorKind::TwoSided, 0.0}, t.realization, 0);
  MappedOracle mapped(o, {{10, 0}, {11, 1}});
  EXPECT_EQ(mapped.query(10), Answer::Yes);
  EXPECT_EQ(mapped.query(11), Answer::No);
  EXPECT_THROW(mapped.query(0), std::out_of_range);
  EXPECT_EQ(o.total_queries(), 2u);
}

TEST(MixSeed, DistinctStreamsGiveDistinctSeeds) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 50; ++s)
    for (std::uint64_t k = 0; k < 50; ++k) seen.insert(mix_seed(s, k));
  EXPECT_EQ(seen.size(), 2500u);
}

}  // namespace
}  // namespace noisy
