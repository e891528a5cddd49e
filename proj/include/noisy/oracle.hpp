#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string_view>
#include <unordered_map>

#include "noisy/graph.hpp"

namespace noisy {

enum class Answer : bool { No = false, Yes = true };

inline Answer operator!(Answer a) { return a == Answer::Yes ? Answer::No : Answer::Yes; }

enum class ErrorKind { TwoSided, FalseNegative, FalsePositive };

std::string_view to_string(ErrorKind kind);
ErrorKind parse_error_kind(std::string_view name);

/// Error regime and its constant error probability, 0 <= p < 1/2.
class ErrorModel {
 public:
  ErrorModel(ErrorKind kind, double p);

  ErrorKind kind() const { return kind_; }
  double p() const { return p_; }

 private:
  ErrorKind kind_;
  double p_;
};

/// Anything that answers "is edge e realized?" one query at a time.
class EdgeOracle {
 public:
  virtual ~EdgeOracle() = default;
  virtual Answer query(EdgeId e) = 0;
};

struct QueryStats {
  std::uint64_t total = 0;
  std::map<EdgeId, std::uint64_t> per_edge;
};

/// Simulated oracle over a fixed realization.
///
/// Each query advances the RNG exactly once whatever the model, so runs with
/// the same seed consume randomness identically across models. Forks draw
/// from an independent stream but charge the same query ledger.
class NoisyOracle final : public EdgeOracle {
 public:
  NoisyOracle(ErrorModel model, Realization realization, std::uint64_t seed);

  Answer query(EdgeId e) override;

  const ErrorModel& model() const { return model_; }
  const Realization& realization() const { return *realization_; }
  QueryStats stats() const;
  std::uint64_t total_queries() const { return ledger_->total; }

  /// Oracle on the same realization and ledger with a stream derived from
  /// this oracle's seed and `stream`.
  NoisyOracle fork(std::uint64_t stream) const;

 private:
  struct Ledger {
    std::uint64_t total = 0;
    std::unordered_map<EdgeId, std::uint64_t> per_edge;
  };

  NoisyOracle(ErrorModel model, std::shared_ptr<const Realization> realization,
              std::uint64_t seed, std::shared_ptr<Ledger> ledger);

  ErrorModel model_;
  std::shared_ptr<const Realization> realization_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::shared_ptr<Ledger> ledger_;
};

/// Negates every answer of the wrapped oracle. Queries are still charged to it.
class InvertedOracle final : public EdgeOracle {
 public:
  explicit InvertedOracle(EdgeOracle& base) : base_(base) {}
  // Copying would silently drop a level of wrapping.
  InvertedOracle(const InvertedOracle&) = delete;
  InvertedOracle& operator=(const InvertedOracle&) = delete;
  Answer query(EdgeId e) override { return !base_.query(e); }

 private:
  EdgeOracle& base_;
};

inline InvertedOracle invert(EdgeOracle& o) { return InvertedOracle(o); }

/// Translates edge ids before forwarding, e.g. dual ids to primal ids.
class MappedOracle final : public EdgeOracle {
 public:
  MappedOracle(EdgeOracle& base, std::map<EdgeId, EdgeId> id_map)
      : base_(base), id_map_(std::move(id_map)) {}
  Answer query(EdgeId e) override;

 private:
  EdgeOracle& base_;
  std::map<EdgeId, EdgeId> id_map_;
};

/// SplitMix64 finalizer; used to derive independent seeds from (seed, stream).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace noisy
