#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "noisy/embedding.hpp"
#include "noisy/graph.hpp"
#include "noisy/oracle.hpp"
#include "noisy/step_machine.hpp"
#include "noisy/union_find.hpp"

namespace noisy {

// ---------------------------------------------------------------------------
// Tree-connectivity verification (2-sided oracle)
// ---------------------------------------------------------------------------

/// epsilon bounds the error on connected trees, delta on disconnected ones,
/// p is the error probability the thresholds are tuned for.
struct VerifyParams {
  double epsilon;
  double delta;
  double p;

  void validate() const;
};

struct ThresholdBudget {
  std::uint64_t threshold;
  std::uint64_t budget;
};

/// threshold = ceil(log_{(1-p)/p}(1/delta)),
/// budget = ceil((1/epsilon) * 1/(1-2p)) * threshold * n.
ThresholdBudget threshold_and_budget(const VerifyParams& params, std::uint64_t n);

/// Queries each tree edge until its Yes-minus-No counter reaches the
/// threshold, drawing on one global budget. Reports disconnected as soon as
/// the budget runs out.
class VerifyMachine final : public StepMachine {
 public:
  VerifyMachine(const MoldGraph& tree, const VerifyParams& params);

  const ThresholdBudget& limits() const { return limits_; }
  std::uint64_t budget_left() const { return budget_left_; }
  /// Counter of the edge currently being walked.
  std::int64_t counter() const { return counter_; }
  std::size_t edge_index() const { return index_; }

 protected:
  Step start() override;
  Step resume(Answer answer) override;

 private:
  Step advance();

  std::vector<EdgeId> edges_;
  ThresholdBudget limits_;
  std::uint64_t budget_left_;
  std::size_t index_ = 0;
  std::int64_t counter_ = 0;
};

/// Requires a tree and a two-sided oracle.
AlgoResult verify_tree(const MoldGraph& tree, NoisyOracle& oracle, const VerifyParams& params);

// ---------------------------------------------------------------------------
// Naive algorithms with a fixed number of queries per edge
// ---------------------------------------------------------------------------

/// ceil(ln(m^2) / (1 - 2p)); zero when m <= 1.
std::uint64_t two_sided_repetitions(std::uint64_t m, double p);

/// ceil(log2(m^2)), computed exactly; zero when m <= 1.
std::uint64_t fp_repetitions(std::uint64_t m);

/// Majority vote per edge over two_sided_repetitions(m, p) queries. The
/// returned tree is built greedily by decreasing Yes-minus-No margin (ties by
/// edge id), which keeps it inside the majority-Yes subgraph when that spans.
class NaiveTwoSidedMachine final : public StepMachine {
 public:
  NaiveTwoSidedMachine(const MoldGraph& g, double p);
  std::uint64_t repetitions() const { return reps_; }

 protected:
  Step start() override;
  Step resume(Answer answer) override;

 private:
  Step next();

  MoldGraph graph_;
  std::vector<EdgeId> edges_;
  std::uint64_t reps_;
  std::size_t edge_ = 0;
  std::uint64_t round_ = 0;
  std::vector<std::int64_t> margins_;
};

/// Requires a two-sided oracle; the repetition count uses the oracle's p.
AlgoResult naive_two_sided(const MoldGraph& g, NoisyOracle& oracle);

/// Queries every edge fp_repetitions(m) times; any No removes the edge.
class NaiveFpMachine final : public StepMachine {
 public:
  explicit NaiveFpMachine(const MoldGraph& g);
  std::uint64_t repetitions() const { return reps_; }

 protected:
  Step start() override;
  Step resume(Answer answer) override;

 private:
  Step next();

  MoldGraph graph_;
  std::vector<EdgeId> edges_;
  std::uint64_t reps_;
  std::size_t edge_ = 0;
  std::uint64_t round_ = 0;
  std::set<EdgeId> refuted_;
};

AlgoResult naive_fp(const MoldGraph& g, EdgeOracle& oracle);

// ---------------------------------------------------------------------------
// False-negative regime: a Yes is always truthful
// ---------------------------------------------------------------------------

/// Round-robin search over a collection of edge sets: each round queries the
/// next edge of every set in turn (each set cycling through its own edges)
/// and stops at the first Yes.
class Discovery {
 public:
  explicit Discovery(std::vector<std::vector<EdgeId>> sets);

  EdgeId pending() const;
  /// Feeds the answer to pending(); returns the edge on a Yes.
  std::optional<EdgeId> feed(Answer answer);
  std::uint64_t rounds_started() const { return rounds_; }

 private:
  std::vector<std::vector<EdgeId>> sets_;
  std::vector<std::size_t> cursor_;
  std::size_t set_ = 0;
  std::uint64_t rounds_ = 1;
};

struct DiscoverResult {
  EdgeId edge;
  std::uint64_t queries;
};

/// Runs until some set yields a Yes. Loops forever if no set can.
DiscoverResult discover(std::vector<std::vector<EdgeId>> sets, EdgeOracle& oracle);

/// Repeatedly discovers a certified edge in the neighborhood of a
/// minimum-degree vertex and contracts its super-edge.
class SparseFnMachine final : public StepMachine {
 public:
  explicit SparseFnMachine(MoldGraph g);
  const MoldGraph& current_graph() const { return graph_; }
  std::size_t contractions() const { return found_.size(); }

 protected:
  Step start() override;
  Step resume(Answer answer) override;

 private:
  Step next_cut();

  MoldGraph graph_;
  std::optional<Discovery> discovery_;
  std::set<EdgeId> found_;
};

AlgoResult solve_sparse_fn(const MoldGraph& g, EdgeOracle& oracle);

/// Queries all m edges per round, in id order, until the certified edges
/// span the graph; stops at the exact query that completes the tree.
class NaiveFnMachine final : public StepMachine {
 public:
  explicit NaiveFnMachine(const MoldGraph& g);
  std::uint64_t rounds_started() const { return rounds_; }

 protected:
  Step start() override;
  Step resume(Answer answer) override;

 private:
  MoldGraph graph_;
  std::vector<EdgeId> edges_;
  std::size_t next_ = 0;
  std::uint64_t rounds_ = 0;
  std::set<EdgeId> tree_;
  VertexUnion components_;
};

AlgoResult naive_fn(const MoldGraph& g, EdgeOracle& oracle);

/// Stream indices used to fork the per-machine oracles of the combined
/// algorithms. A solo run on oracle.fork(stream) reproduces the machine's
/// answers inside the combined run exactly.
inline constexpr std::uint64_t kSparseStream = 1;
inline constexpr std::uint64_t kNaiveStream = 2;
inline constexpr std::uint64_t kPlanarStream = 3;

/// Alternates SparseFnMachine (first) with NaiveFnMachine. Requires an FN
/// oracle.
InterleaveResult combined_fn(const MoldGraph& g, NoisyOracle& oracle);

// ---------------------------------------------------------------------------
// False-positive regime: a No is always truthful
// ---------------------------------------------------------------------------

/// SparseFnMachine on the planar dual. It emits dual edge ids and expects the
/// answers of an inverted oracle composed with the dual-to-primal id map; see
/// PlanarFpView. Its result is the primal complement of the dual tree.
class PlanarFpMachine final : public StepMachine {
 public:
  PlanarFpMachine(const MoldGraph& g, const PlanarEmbedding& emb);

  const DualGraph& dual() const { return dual_; }
  /// Dual spanning tree found, once done. Each edge certified non-realized.
  const std::set<EdgeId>& dual_tree() const { return dual_tree_; }

 protected:
  Step start() override;
  Step resume(Answer answer) override;

 private:
  Step translate(Step inner);

  std::vector<EdgeId> primal_edges_;
  DualGraph dual_;
  SparseFnMachine inner_;
  std::set<EdgeId> dual_tree_;
};

/// Oracle view a PlanarFpMachine must be answered through.
class PlanarFpView final : public EdgeOracle {
 public:
  PlanarFpView(EdgeOracle& primal, const PlanarFpMachine& machine)
      : mapped_(primal, machine.dual().dual_to_primal), inverted_(mapped_) {}
  Answer query(EdgeId dual_edge) override { return inverted_.query(dual_edge); }

 private:
  MappedOracle mapped_;
  InvertedOracle inverted_;
};

/// Requires an FP oracle. Terminates only if the realized subgraph is a
/// tree, in which case it returns that tree exactly; `query_cap` bounds the
/// run otherwise and yields RunStatus::QueryCapReached.
AlgoResult solve_planar_fp(const MoldGraph& g, const PlanarEmbedding& emb, NoisyOracle& oracle,
                           std::optional<std::uint64_t> query_cap = std::nullopt);

/// Alternates PlanarFpMachine (first, when an embedding is given) with
/// NaiveFpMachine; without an embedding runs NaiveFpMachine alone on the
/// kNaiveStream fork. Requires an FP oracle.
InterleaveResult combined_fp(const MoldGraph& g, const std::optional<PlanarEmbedding>& emb,
                             NoisyOracle& oracle);

// ---------------------------------------------------------------------------
// Counter random walk
// ---------------------------------------------------------------------------

/// Probability that a walk stepping up with probability p (p < 1/2) ever
/// reaches c from x: ((1-p)/p)^(x-c), for 0 <= x <= c.
double hitting_probability(double p, std::int64_t c, std::int64_t x);

/// Upper bound c/(1-2p) on the expected time for a walk stepping up with
/// probability 1-p to climb from 0 to c.
double expected_hitting_time_bound(double p, std::int64_t c);

}  // namespace noisy
