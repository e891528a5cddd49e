#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "noisy/algorithms.hpp"
#include "numeric.hpp"

namespace noisy {

std::uint64_t two_sided_repetitions(std::uint64_t m, double p) {
  if (!(p >= 0.0 && p < 0.5)) throw std::invalid_argument("p must lie in [0, 1/2)");
  if (m <= 1) return 0;
  const double md = static_cast<double>(m);
  return detail::ceil_tolerant(std::log(md * md) / (1.0 - 2.0 * p));
}

NaiveTwoSidedMachine::NaiveTwoSidedMachine(const MoldGraph& g, double p)
    : graph_(g),
      edges_(g.edge_ids()),
      reps_(two_sided_repetitions(g.edge_count(), p)),
      margins_(edges_.size(), 0) {}

Step NaiveTwoSidedMachine::start() { return next(); }

Step NaiveTwoSidedMachine::resume(Answer answer) {
  margins_[edge_] += answer == Answer::Yes ? 1 : -1;
  if (++round_ == reps_) {
    ++edge_;
    round_ = 0;
  }
  return next();
}

Step NaiveTwoSidedMachine::next() {
  if (reps_ > 0 && edge_ < edges_.size()) return NeedQuery{edges_[edge_]};
  // Kruskal by decreasing vote margin. Majority-Yes edges come first, so the
  // tree lies inside the majority-Yes subgraph whenever that is connected.
  std::vector<std::size_t> order(edges_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return margins_[a] > margins_[b]; });
  VertexUnion components(graph_.vertices());
  std::set<EdgeId> tree;
  for (std::size_t i : order) {
    const Edge e = graph_.edge(edges_[i]);
    if (components.unite(e.u, e.v)) tree.insert(e.id);
  }
  if (components.components() != 1) throw GraphError("moldgraph is disconnected");
  return AlgoResult{SpanningTree{std::move(tree)}};
}

AlgoResult naive_two_sided(const MoldGraph& g, NoisyOracle& oracle) {
  if (oracle.model().kind() != ErrorKind::TwoSided)
    throw std::invalid_argument("naive two-sided algorithm needs a two-sided oracle");
  NaiveTwoSidedMachine machine(g, oracle.model().p());
  return run_machine(machine, oracle);
}

}  // namespace noisy
