#include "noisy/step_machine.hpp"

namespace noisy {

Step StepMachine::step(std::optional<Answer> answer) {
  switch (phase_) {
    case Phase::Fresh:
      if (answer) throw ProtocolError("first step must not carry an answer");
      phase_ = Phase::Waiting;
      return finish(start());
    case Phase::Waiting:
      if (!answer) throw ProtocolError("step expects the answer to the pending query");
      ++answered_;
      return finish(resume(*answer));
    case Phase::Done:
      break;
  }
  throw ProtocolError("machine already finished");
}

Step StepMachine::finish(Step s) {
  if (auto* result = std::get_if<AlgoResult>(&s)) {
    result->queries_used = answered_;
    phase_ = Phase::Done;
  }
  return s;
}

AlgoResult run_machine(StepMachine& machine, EdgeOracle& oracle,
                       std::optional<std::uint64_t> query_cap) {
  Step s = machine.step();
  std::uint64_t used = 0;
  while (auto* need = std::get_if<NeedQuery>(&s)) {
    if (query_cap && used >= *query_cap) {
      AlgoResult capped;
      capped.queries_used = used;
      capped.status = RunStatus::QueryCapReached;
      return capped;
    }
    Answer a = oracle.query(need->edge);
    ++used;
    s = machine.step(a);
  }
  return std::get<AlgoResult>(std::move(s));
}

InterleaveResult interleave(StepMachine& first, EdgeOracle& first_oracle,
                            StepMachine& second, EdgeOracle& second_oracle) {
  auto done = [&](AlgoResult r, Winner w) {
    InterleaveResult out{std::move(r), w, first.answers_consumed(), second.answers_consumed()};
    out.result.queries_used = out.first_queries + out.second_queries;
    return out;
  };

  Step a = first.step();
  if (auto* r = std::get_if<AlgoResult>(&a)) return done(std::move(*r), Winner::First);
  Step b = second.step();
  if (auto* r = std::get_if<AlgoResult>(&b)) return done(std::move(*r), Winner::Second);

  for (;;) {
    a = first.step(first_oracle.query(std::get<NeedQuery>(a).edge));
    if (auto* r = std::get_if<AlgoResult>(&a)) return done(std::move(*r), Winner::First);
    b = second.step(second_oracle.query(std::get<NeedQuery>(b).edge));
    if (auto* r = std::get_if<AlgoResult>(&b)) return done(std::move(*r), Winner::Second);
  }
}

}  // namespace noisy
