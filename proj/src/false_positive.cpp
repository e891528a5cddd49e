#include <stdexcept>

#include "noisy/algorithms.hpp"

namespace noisy {
namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t fp_repetitions(std::uint64_t m) {
  if (m <= 1) return 0;
  const u128 target = static_cast<u128>(m) * m;
  std::uint64_t k = 0;
  u128 power = 1;
  while (power < target) {
    power <<= 1;
    ++k;
  }
  return k;
}

NaiveFpMachine::NaiveFpMachine(const MoldGraph& g)
    : graph_(g), edges_(g.edge_ids()), reps_(fp_repetitions(g.edge_count())) {}

Step NaiveFpMachine::start() { return next(); }

Step NaiveFpMachine::resume(Answer answer) {
  if (answer == Answer::No) refuted_.insert(edges_[edge_]);
  if (++round_ == reps_) {
    ++edge_;
    round_ = 0;
  }
  return next();
}

Step NaiveFpMachine::next() {
  if (reps_ > 0 && edge_ < edges_.size()) return NeedQuery{edges_[edge_]};
  std::set<EdgeId> survivors;
  for (EdgeId e : edges_)
    if (!refuted_.contains(e)) survivors.insert(e);
  return AlgoResult{SpanningTree{spanning_tree_preferring(graph_, survivors)}};
}

AlgoResult naive_fp(const MoldGraph& g, EdgeOracle& oracle) {
  NaiveFpMachine machine(g);
  return run_machine(machine, oracle);
}

PlanarFpMachine::PlanarFpMachine(const MoldGraph& g, const PlanarEmbedding& emb)
    : primal_edges_(g.edge_ids()), dual_(build_dual(g, emb)), inner_(dual_.graph) {}

Step PlanarFpMachine::start() { return translate(inner_.step()); }

Step PlanarFpMachine::resume(Answer answer) { return translate(inner_.step(answer)); }

Step PlanarFpMachine::translate(Step inner) {
  auto* result = std::get_if<AlgoResult>(&inner);
  if (result == nullptr) return inner;
  dual_tree_ = result->tree();
  std::set<EdgeId> removed;
  for (EdgeId d : dual_tree_) removed.insert(dual_.dual_to_primal.at(d));
  std::set<EdgeId> kept;
  for (EdgeId e : primal_edges_)
    if (!removed.contains(e)) kept.insert(e);
  return AlgoResult{SpanningTree{std::move(kept)}};
}

AlgoResult solve_planar_fp(const MoldGraph& g, const PlanarEmbedding& emb, NoisyOracle& oracle,
                           std::optional<std::uint64_t> query_cap) {
  if (oracle.model().kind() != ErrorKind::FalsePositive)
    throw std::invalid_argument("planar FP algorithm needs a false-positive oracle");
  PlanarFpMachine machine(g, emb);
  PlanarFpView view(oracle, machine);
  AlgoResult result = run_machine(machine, view, query_cap);
  if (result.status == RunStatus::Complete && !is_spanning_tree(g, result.tree()))
    result.status = RunStatus::InvalidOutput;
  return result;
}

InterleaveResult combined_fp(const MoldGraph& g, const std::optional<PlanarEmbedding>& emb,
                             NoisyOracle& oracle) {
  if (oracle.model().kind() != ErrorKind::FalsePositive)
    throw std::invalid_argument("combined FP algorithm needs a false-positive oracle");
  NoisyOracle naive_oracle = oracle.fork(kNaiveStream);
  NaiveFpMachine naive(g);
  if (!emb) {
    AlgoResult solo = run_machine(naive, naive_oracle);
    const std::uint64_t used = solo.queries_used;
    return {std::move(solo), Winner::Second, 0, used};
  }
  NoisyOracle planar_oracle = oracle.fork(kPlanarStream);
  PlanarFpMachine planar(g, *emb);
  PlanarFpView view(planar_oracle, planar);
  return interleave(planar, view, naive, naive_oracle);
}

}  // namespace noisy
