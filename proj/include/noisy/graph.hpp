#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace noisy {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
};

/// Unordered vertex pair identifying a super-edge. Always stored with a < b.
struct SuperEdgeKey {
  VertexId a;
  VertexId b;

  static SuperEdgeKey of(VertexId x, VertexId y) {
    return x < y ? SuperEdgeKey{x, y} : SuperEdgeKey{y, x};
  }
  auto operator<=>(const SuperEdgeKey&) const = default;
};

/// All parallel simple edges between one vertex pair, ids ascending.
struct SuperEdge {
  SuperEdgeKey key;
  std::vector<EdgeId> edges;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multigraph over stable simple-edge ids. Parallel edges are grouped into
/// super-edges keyed by their endpoint pair; self-loops are rejected.
///
/// Contraction merges the two endpoints into the smaller vertex id, drops the
/// contracted super-edge, and unions super-edges that become parallel. An edge
/// id keeps its identity across contractions; only its current endpoints move.
class MoldGraph {
 public:
  MoldGraph() = default;
  /// Vertices are 0..vertex_count-1.
  MoldGraph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return endpoints_.size(); }
  std::size_t super_edge_count() const { return super_edges_.size(); }

  bool has_vertex(VertexId v) const { return adjacency_.contains(v); }
  bool has_edge(EdgeId e) const { return endpoints_.contains(e); }

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edge_ids() const;
  /// Current endpoints of a live edge.
  Edge edge(EdgeId e) const;
  std::vector<Edge> edges() const;

  /// Number of incident super-edges.
  std::size_t degree(VertexId v) const;
  const std::set<VertexId>& neighbors(VertexId v) const;
  SuperEdgeKey super_edge_of(EdgeId e) const;
  const std::vector<EdgeId>& super_edge(SuperEdgeKey key) const;
  bool has_super_edge(SuperEdgeKey key) const { return super_edges_.contains(key); }
  std::vector<SuperEdge> super_edges() const;

  void contract_in_place(SuperEdgeKey key);

  /// Subgraph on the same vertex set keeping only the listed edges.
  MoldGraph edge_subgraph(std::span<const EdgeId> keep) const;

 private:
  void add_edge(const Edge& e);

  std::map<VertexId, std::set<VertexId>> adjacency_;
  std::map<EdgeId, std::pair<VertexId, VertexId>> endpoints_;
  std::map<SuperEdgeKey, std::vector<EdgeId>> super_edges_;
};

MoldGraph contract(const MoldGraph& g, SuperEdgeKey s);

/// Vertex of minimum super-edge degree, smallest id on ties.
VertexId min_degree_vertex(const MoldGraph& g);

/// Super-edges incident to v, ordered by their smallest edge id.
std::vector<SuperEdge> neighborhood(const MoldGraph& g, VertexId v);

bool is_spanning_tree(const MoldGraph& g, std::span<const EdgeId> edges);
bool is_spanning_tree(const MoldGraph& g, const std::set<EdgeId>& edges);

bool is_connected(const MoldGraph& g);

struct Sparsity {
  double rho_simple;
  double rho_super;
};

Sparsity sparsity(const MoldGraph& g);

/// Some spanning tree of g, built greedily from `preferred` edges first and
/// then the remaining edges in id order. Throws if g is disconnected.
std::set<EdgeId> spanning_tree_preferring(const MoldGraph& g,
                                          const std::set<EdgeId>& preferred);

/// Connected spanning subgraph chosen by the adversary. Also records the
/// moldgraph's full edge-id universe so queries on unknown ids can be refused.
class Realization {
 public:
  Realization(const MoldGraph& g, std::set<EdgeId> realized);

  bool is_realized(EdgeId e) const { return realized_.contains(e); }
  bool in_universe(EdgeId e) const { return universe_.contains(e); }
  const std::set<EdgeId>& realized() const { return realized_; }
  const std::set<EdgeId>& universe() const { return universe_; }

 private:
  std::set<EdgeId> realized_;
  std::set<EdgeId> universe_;
};

}  // namespace noisy
