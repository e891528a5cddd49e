#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>

#include "noisy/graph.hpp"
#include "noisy/oracle.hpp"

namespace noisy {

struct NeedQuery {
  EdgeId edge;
};

struct SpanningTree {
  std::set<EdgeId> edges;
};

struct VerifyVerdict {
  bool connected;
};

enum class RunStatus {
  Complete,
  /// The driver stopped the machine before it finished; the value is empty.
  QueryCapReached,
  /// The machine finished but its output failed validation.
  InvalidOutput,
};

struct AlgoResult {
  std::variant<SpanningTree, VerifyVerdict> value;
  std::uint64_t queries_used = 0;
  RunStatus status = RunStatus::Complete;

  const std::set<EdgeId>& tree() const { return std::get<SpanningTree>(value).edges; }
  bool verdict() const { return std::get<VerifyVerdict>(value).connected; }
};

using Step = std::variant<NeedQuery, AlgoResult>;

class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A resumable algorithm that asks for one oracle answer at a time.
///
/// The first step() takes no answer; every later step() takes the answer to
/// the query the machine emitted last. Once the machine has returned its
/// result, further steps throw ProtocolError. The reported queries_used is
/// the number of answers the machine consumed.
class StepMachine {
 public:
  virtual ~StepMachine() = default;

  Step step(std::optional<Answer> answer = std::nullopt);

  bool done() const { return phase_ == Phase::Done; }
  std::uint64_t answers_consumed() const { return answered_; }

 protected:
  virtual Step start() = 0;
  virtual Step resume(Answer answer) = 0;

 private:
  enum class Phase { Fresh, Waiting, Done };

  Step finish(Step s);

  Phase phase_ = Phase::Fresh;
  std::uint64_t answered_ = 0;
};

/// Drives a machine against one oracle until it finishes, or until
/// `query_cap` answers have been consumed.
AlgoResult run_machine(StepMachine& machine, EdgeOracle& oracle,
                       std::optional<std::uint64_t> query_cap = std::nullopt);

enum class Winner { First, Second };

struct InterleaveResult {
  /// The winner's result, with queries_used set to the combined total.
  AlgoResult result;
  Winner winner;
  std::uint64_t first_queries;
  std::uint64_t second_queries;
};

/// Strict alternation: first, second, first, ... one query per turn, each
/// machine answered by its own oracle view. Returns as soon as either
/// machine finishes; if `first` finishes at its own query t the total is
/// 2t - 1, if `second` does it is 2t.
InterleaveResult interleave(StepMachine& first, EdgeOracle& first_oracle,
                            StepMachine& second, EdgeOracle& second_oracle);

}  // namespace noisy
