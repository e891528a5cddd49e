#include "noisy/graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "noisy/union_find.hpp"

namespace noisy {

MoldGraph::MoldGraph(std::size_t vertex_count, std::span<const Edge> edges) {
  for (VertexId v = 0; v < vertex_count; ++v) adjacency_.emplace(v, std::set<VertexId>{});
  for (const Edge& e : edges) add_edge(e);
}

void MoldGraph::add_edge(const Edge& e) {
  if (e.u == e.v) throw GraphError("self-loop on edge " + std::to_string(e.id));
  if (!has_vertex(e.u) || !has_vertex(e.v))
    throw GraphError("edge " + std::to_string(e.id) + " has an unknown endpoint");
  if (!endpoints_.emplace(e.id, std::pair{e.u, e.v}).second)
    throw GraphError("duplicate edge id " + std::to_string(e.id));
  auto& group = super_edges_[SuperEdgeKey::of(e.u, e.v)];
  group.insert(std::upper_bound(group.begin(), group.end(), e.id), e.id);
  adjacency_[e.u].insert(e.v);
  adjacency_[e.v].insert(e.u);
}

std::vector<VertexId> MoldGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, _] : adjacency_) out.push_back(v);
  return out;
}

std::vector<EdgeId> MoldGraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(endpoints_.size());
  for (const auto& [e, _] : endpoints_) out.push_back(e);
  return out;
}

Edge MoldGraph::edge(EdgeId e) const {
  auto it = endpoints_.find(e);
  if (it == endpoints_.end()) throw GraphError("unknown edge " + std::to_string(e));
  return {e, it->second.first, it->second.second};
}

std::vector<Edge> MoldGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(endpoints_.size());
  for (const auto& [e, uv] : endpoints_) out.push_back({e, uv.first, uv.second});
  return out;
}

std::size_t MoldGraph::degree(VertexId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw GraphError("unknown vertex " + std::to_string(v));
  return it->second.size();
}

const std::set<VertexId>& MoldGraph::neighbors(VertexId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw GraphError("unknown vertex " + std::to_string(v));
  return it->second;
}

SuperEdgeKey MoldGraph::super_edge_of(EdgeId e) const {
  Edge ed = edge(e);
  return SuperEdgeKey::of(ed.u, ed.v);
}

const std::vector<EdgeId>& MoldGraph::super_edge(SuperEdgeKey key) const {
  auto it = super_edges_.find(key);
  if (it == super_edges_.end())
    throw GraphError("no super-edge between " + std::to_string(key.a) + " and " +
                     std::to_string(key.b));
  return it->second;
}

std::vector<SuperEdge> MoldGraph::super_edges() const {
  std::vector<SuperEdge> out;
  out.reserve(super_edges_.size());
  for (const auto& [key, ids] : super_edges_) out.push_back({key, ids});
  return out;
}

void MoldGraph::contract_in_place(SuperEdgeKey key) {
  key = SuperEdgeKey::of(key.a, key.b);
  auto contracted = super_edges_.find(key);
  if (contracted == super_edges_.end())
    throw GraphError("super-edge " + std::to_string(key.a) + "-" + std::to_string(key.b) +
                     " does not exist (unknown or already contracted)");

  const VertexId keep = key.a;
  const VertexId drop = key.b;
  for (EdgeId e : contracted->second) endpoints_.erase(e);
  super_edges_.erase(contracted);
  adjacency_[keep].erase(drop);

  auto dropped = adjacency_.extract(drop);
  for (VertexId w : dropped.mapped()) {
    if (w == keep) continue;
    auto old_node = super_edges_.extract(SuperEdgeKey::of(drop, w));
    std::vector<EdgeId>& moved = old_node.mapped();
    for (EdgeId e : moved) {
      auto& uv = endpoints_.at(e);
      if (uv.first == drop) uv.first = keep;
      if (uv.second == drop) uv.second = keep;
    }
    auto& target = super_edges_[SuperEdgeKey::of(keep, w)];
    std::vector<EdgeId> merged;
    merged.reserve(target.size() + moved.size());
    std::merge(target.begin(), target.end(), moved.begin(), moved.end(),
               std::back_inserter(merged));
    target = std::move(merged);

    auto& wn = adjacency_.at(w);
    wn.erase(drop);
    wn.insert(keep);
    adjacency_[keep].insert(w);
  }
}

MoldGraph MoldGraph::edge_subgraph(std::span<const EdgeId> keep) const {
  MoldGraph out;
  for (const auto& [v, _] : adjacency_) out.adjacency_.emplace(v, std::set<VertexId>{});
  for (EdgeId e : keep) out.add_edge(edge(e));
  return out;
}

MoldGraph contract(const MoldGraph& g, SuperEdgeKey s) {
  MoldGraph out = g;
  out.contract_in_place(s);
  return out;
}

VertexId min_degree_vertex(const MoldGraph& g) {
  if (g.vertex_count() == 0) throw GraphError("min_degree_vertex on an empty graph");
  VertexId best = 0;
  std::size_t best_degree = 0;
  bool first = true;
  for (VertexId v : g.vertices()) {
    std::size_t d = g.degree(v);
    if (first || d < best_degree) {
      best = v;
      best_degree = d;
      first = false;
    }
  }
  return best;
}

std::vector<SuperEdge> neighborhood(const MoldGraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  std::vector<SuperEdge> out;
  for (VertexId w : g.neighbors(v)) {
    SuperEdgeKey key = SuperEdgeKey::of(v, w);
    out.push_back({key, g.super_edge(key)});
  }
  std::sort(out.begin(), out.end(), [](const SuperEdge& x, const SuperEdge& y) {
    return x.edges.front() < y.edges.front();
  });
  return out;
}

bool is_spanning_tree(const MoldGraph& g, std::span<const EdgeId> edges) {
  if (g.vertex_count() == 0) return false;
  if (edges.size() + 1 != g.vertex_count()) return false;
  VertexUnion uf(g.vertices());
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) return false;
    Edge ed = g.edge(e);
    if (!uf.unite(ed.u, ed.v)) return false;
  }
  return uf.components() == 1;
}

bool is_spanning_tree(const MoldGraph& g, const std::set<EdgeId>& edges) {
  std::vector<EdgeId> v(edges.begin(), edges.end());
  return is_spanning_tree(g, std::span<const EdgeId>(v));
}

bool is_connected(const MoldGraph& g) {
  if (g.vertex_count() == 0) return false;
  VertexUnion uf(g.vertices());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  return uf.components() == 1;
}

Sparsity sparsity(const MoldGraph& g) {
  if (g.vertex_count() == 0) throw GraphError("sparsity of an empty graph");
  const double n = static_cast<double>(g.vertex_count());
  return {static_cast<double>(g.edge_count()) / n,
          static_cast<double>(g.super_edge_count()) / n};
}

std::set<EdgeId> spanning_tree_preferring(const MoldGraph& g,
                                          const std::set<EdgeId>& preferred) {
  VertexUnion uf(g.vertices());
  std::set<EdgeId> tree;
  auto offer = [&](EdgeId e) {
    Edge ed = g.edge(e);
    if (uf.unite(ed.u, ed.v)) tree.insert(e);
  };
  for (EdgeId e : preferred)
    if (g.has_edge(e)) offer(e);
  for (EdgeId e : g.edge_ids())
    if (!preferred.contains(e)) offer(e);
  if (uf.components() != 1) throw GraphError("graph is disconnected; no spanning tree");
  return tree;
}

Realization::Realization(const MoldGraph& g, std::set<EdgeId> realized)
    : realized_(std::move(realized)) {
  for (EdgeId e : g.edge_ids()) universe_.insert(e);
  for (EdgeId e : realized_)
    if (!universe_.contains(e))
      throw GraphError("realized edge " + std::to_string(e) + " is not in the moldgraph");
  std::vector<EdgeId> ids(realized_.begin(), realized_.end());
  if (!is_connected(g.edge_subgraph(ids)))
    throw GraphError("realized subgraph is not connected and spanning");
}

}  // namespace noisy
