#pragma once

#include <boost/pending/disjoint_sets.hpp>

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "noisy/graph.hpp"

namespace noisy {

/// Incremental connectivity over an arbitrary vertex-id set.
class VertexUnion {
 public:
  explicit VertexUnion(const std::vector<VertexId>& vertices)
      : sets_(vertices.size()), components_(vertices.size()) {
    index_.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) index_.emplace(vertices[i], i);
  }

  /// Returns true if u and v were in different components.
  bool unite(VertexId u, VertexId v) {
    auto ru = sets_.find_set(index_.at(u));
    auto rv = sets_.find_set(index_.at(v));
    if (ru == rv) return false;
    sets_.link(ru, rv);
    --components_;
    return true;
  }

  bool connected(VertexId u, VertexId v) {
    return sets_.find_set(index_.at(u)) == sets_.find_set(index_.at(v));
  }

  std::size_t components() const { return components_; }

 private:
  std::unordered_map<VertexId, std::size_t> index_;
  boost::disjoint_sets_with_storage<> sets_;
  std::size_t components_;
};

}  // namespace noisy
