#include "noisy/oracle.hpp"

#include <stdexcept>
#include <string>

namespace noisy {
namespace {

// Uniform double in [0, 1) from the top 53 bits, independent of the
// standard library's distribution implementation.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TwoSided: return "two-sided";
    case ErrorKind::FalseNegative: return "fn";
    case ErrorKind::FalsePositive: return "fp";
  }
  return "?";
}

ErrorKind parse_error_kind(std::string_view name) {
  if (name == "two-sided") return ErrorKind::TwoSided;
  if (name == "fn") return ErrorKind::FalseNegative;
  if (name == "fp") return ErrorKind::FalsePositive;
  throw std::invalid_argument("unknown error model '" + std::string(name) +
                              "' (expected two-sided, fn or fp)");
}

ErrorModel::ErrorModel(ErrorKind kind, double p) : kind_(kind), p_(p) {
  if (!(p >= 0.0 && p < 0.5))
    throw std::invalid_argument("error probability must lie in [0, 1/2), got " +
                                std::to_string(p));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

NoisyOracle::NoisyOracle(ErrorModel model, Realization realization, std::uint64_t seed)
    : NoisyOracle(model, std::make_shared<const Realization>(std::move(realization)), seed,
                  std::make_shared<Ledger>()) {}

NoisyOracle::NoisyOracle(ErrorModel model, std::shared_ptr<const Realization> realization,
                         std::uint64_t seed, std::shared_ptr<Ledger> ledger)
    : model_(model),
      realization_(std::move(realization)),
      seed_(seed),
      rng_(mix_seed(seed, 0)),
      ledger_(std::move(ledger)) {}

Answer NoisyOracle::query(EdgeId e) {
  if (!realization_->in_universe(e))
    throw std::out_of_range("query on unknown edge " + std::to_string(e));
  ++ledger_->total;
  ++ledger_->per_edge[e];

  const bool flip = unit_draw(rng_) < model_.p();
  const bool realized = realization_->is_realized(e);
  bool yes = false;
  switch (model_.kind()) {
    case ErrorKind::TwoSided: yes = realized != flip; break;
    case ErrorKind::FalseNegative: yes = realized && !flip; break;
    case ErrorKind::FalsePositive: yes = realized || flip; break;
  }
  return yes ? Answer::Yes : Answer::No;
}

QueryStats NoisyOracle::stats() const {
  QueryStats out;
  out.total = ledger_->total;
  out.per_edge.insert(ledger_->per_edge.begin(), ledger_->per_edge.end());
  return out;
}

NoisyOracle NoisyOracle::fork(std::uint64_t stream) const {
  return NoisyOracle(model_, realization_, mix_seed(seed_, stream + 1), ledger_);
}

Answer MappedOracle::query(EdgeId e) {
  auto it = id_map_.find(e);
  if (it == id_map_.end()) throw std::out_of_range("no mapping for edge " + std::to_string(e));
  return base_.query(it->second);
}

}  // namespace noisy
