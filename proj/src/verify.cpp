#include <cmath>
#include <stdexcept>
#include <string>

#include "noisy/algorithms.hpp"
#include "numeric.hpp"

namespace noisy {

void VerifyParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("p must lie in (0, 1/2)");
}

ThresholdBudget threshold_and_budget(const VerifyParams& params, std::uint64_t n) {
  params.validate();
  if (n == 0) throw std::invalid_argument("tree must have at least one edge");
  const double ratio = (1.0 - params.p) / params.p;
  const std::uint64_t threshold =
      detail::ceil_tolerant(std::log(1.0 / params.delta) / std::log(ratio));
  if (threshold == 0) throw std::invalid_argument("degenerate threshold 0");
  const std::uint64_t scale =
      detail::ceil_tolerant((1.0 / params.epsilon) * (1.0 / (1.0 - 2.0 * params.p)));
  return {threshold, scale * threshold * n};
}

VerifyMachine::VerifyMachine(const MoldGraph& tree, const VerifyParams& params)
    : edges_(tree.edge_ids()), limits_{0, 0}, budget_left_(0) {
  params.validate();
  if (!is_spanning_tree(tree, std::span<const EdgeId>(edges_)))
    throw GraphError("verification input is not a tree");
  if (!edges_.empty()) {
    limits_ = threshold_and_budget(params, edges_.size());
    budget_left_ = limits_.budget;
  }
}

Step VerifyMachine::start() { return advance(); }

Step VerifyMachine::resume(Answer answer) {
  --budget_left_;
  counter_ += answer == Answer::Yes ? 1 : -1;
  return advance();
}

Step VerifyMachine::advance() {
  const auto threshold = static_cast<std::int64_t>(limits_.threshold);
  for (;;) {
    if (index_ == edges_.size()) return AlgoResult{VerifyVerdict{true}};
    if (counter_ < threshold && budget_left_ > 0) return NeedQuery{edges_[index_]};
    if (budget_left_ == 0) return AlgoResult{VerifyVerdict{false}};
    ++index_;
    counter_ = 0;
  }
}

AlgoResult verify_tree(const MoldGraph& tree, NoisyOracle& oracle, const VerifyParams& params) {
  if (oracle.model().kind() != ErrorKind::TwoSided)
    throw std::invalid_argument("tree verification needs a two-sided oracle");
  VerifyMachine machine(tree, params);
  return run_machine(machine, oracle);
}

}  // namespace noisy
