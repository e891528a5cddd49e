#include <stdexcept>

#include "noisy/algorithms.hpp"

namespace noisy {

Discovery::Discovery(std::vector<std::vector<EdgeId>> sets)
    : sets_(std::move(sets)), cursor_(sets_.size(), 0) {
  std::erase_if(sets_, [](const auto& s) { return s.empty(); });
  cursor_.assign(sets_.size(), 0);
  if (sets_.empty()) throw std::invalid_argument("discovery needs at least one non-empty set");
}

EdgeId Discovery::pending() const { return sets_[set_][cursor_[set_]]; }

std::optional<EdgeId> Discovery::feed(Answer answer) {
  const EdgeId asked = pending();
  if (answer == Answer::Yes) return asked;
  cursor_[set_] = (cursor_[set_] + 1) % sets_[set_].size();
  if (++set_ == sets_.size()) {
    set_ = 0;
    ++rounds_;
  }
  return std::nullopt;
}

DiscoverResult discover(std::vector<std::vector<EdgeId>> sets, EdgeOracle& oracle) {
  Discovery d(std::move(sets));
  std::uint64_t queries = 0;
  for (;;) {
    const EdgeId e = d.pending();
    ++queries;
    if (auto found = d.feed(oracle.query(e))) return {*found, queries};
  }
}

SparseFnMachine::SparseFnMachine(MoldGraph g) : graph_(std::move(g)) {
  if (graph_.vertex_count() == 0) throw GraphError("empty moldgraph");
}

Step SparseFnMachine::start() { return next_cut(); }

Step SparseFnMachine::resume(Answer answer) {
  if (auto found = discovery_->feed(answer)) {
    graph_.contract_in_place(graph_.super_edge_of(*found));
    found_.insert(*found);
    return next_cut();
  }
  return NeedQuery{discovery_->pending()};
}

Step SparseFnMachine::next_cut() {
  if (graph_.vertex_count() == 1) {
    discovery_.reset();
    return AlgoResult{SpanningTree{found_}};
  }
  const VertexId u = min_degree_vertex(graph_);
  std::vector<std::vector<EdgeId>> sets;
  for (SuperEdge& s : neighborhood(graph_, u)) sets.push_back(std::move(s.edges));
  if (sets.empty()) throw GraphError("moldgraph is disconnected");
  discovery_.emplace(std::move(sets));
  return NeedQuery{discovery_->pending()};
}

AlgoResult solve_sparse_fn(const MoldGraph& g, EdgeOracle& oracle) {
  SparseFnMachine machine(g);
  return run_machine(machine, oracle);
}

NaiveFnMachine::NaiveFnMachine(const MoldGraph& g)
    : graph_(g), edges_(g.edge_ids()), components_(g.vertices()) {
  if (graph_.vertex_count() == 0) throw GraphError("empty moldgraph");
}

Step NaiveFnMachine::start() {
  if (components_.components() == 1) return AlgoResult{SpanningTree{}};
  if (edges_.empty()) throw GraphError("moldgraph is disconnected");
  rounds_ = 1;
  return NeedQuery{edges_[next_]};
}

Step NaiveFnMachine::resume(Answer answer) {
  const EdgeId asked = edges_[next_];
  if (answer == Answer::Yes) {
    const Edge e = graph_.edge(asked);
    if (components_.unite(e.u, e.v)) tree_.insert(asked);
    if (components_.components() == 1) return AlgoResult{SpanningTree{tree_}};
  }
  if (++next_ == edges_.size()) {
    next_ = 0;
    ++rounds_;
  }
  return NeedQuery{edges_[next_]};
}

AlgoResult naive_fn(const MoldGraph& g, EdgeOracle& oracle) {
  NaiveFnMachine machine(g);
  return run_machine(machine, oracle);
}

InterleaveResult combined_fn(const MoldGraph& g, NoisyOracle& oracle) {
  if (oracle.model().kind() != ErrorKind::FalseNegative)
    throw std::invalid_argument("combined FN algorithm needs a false-negative oracle");
  NoisyOracle sparse_oracle = oracle.fork(kSparseStream);
  NoisyOracle naive_oracle = oracle.fork(kNaiveStream);
  SparseFnMachine sparse(g);
  NaiveFnMachine naive(g);
  return interleave(sparse, sparse_oracle, naive, naive_oracle);
}

}  // namespace noisy
