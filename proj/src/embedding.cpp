#include "noisy/embedding.hpp"

#include <set>
#include <string>

namespace noisy {
namespace {

VertexId vertex_at(const Edge& e, std::uint8_t end) { return end == 0 ? e.u : e.v; }

// Position of every edge-end inside its vertex's rotation.
std::map<EdgeEnd, std::size_t> rotation_index(const PlanarEmbedding& emb) {
  std::map<EdgeEnd, std::size_t> index;
  for (const auto& [v, ends] : emb.rotation)
    for (std::size_t i = 0; i < ends.size(); ++i) index.emplace(ends[i], i);
  return index;
}

}  // namespace

void validate_rotation(const MoldGraph& g, const PlanarEmbedding& emb) {
  std::set<EdgeEnd> seen;
  for (const auto& [v, ends] : emb.rotation) {
    if (!g.has_vertex(v))
      throw GraphError("rotation given for unknown vertex " + std::to_string(v));
    for (const EdgeEnd& end : ends) {
      if (end.end > 1) throw GraphError("edge-end marker must be 0 or 1");
      if (!g.has_edge(end.edge))
        throw GraphError("rotation references unknown edge " + std::to_string(end.edge));
      if (vertex_at(g.edge(end.edge), end.end) != v)
        throw GraphError("edge-end " + std::to_string(end.edge) + "." +
                         std::to_string(end.end) + " is listed at the wrong vertex");
      if (!seen.insert(end).second)
        throw GraphError("edge-end " + std::to_string(end.edge) + "." +
                         std::to_string(end.end) + " appears twice");
    }
  }
  if (seen.size() != 2 * g.edge_count())
    throw GraphError("rotation system does not cover every edge-end");
}

std::vector<Face> trace_faces(const MoldGraph& g, const PlanarEmbedding& emb) {
  validate_rotation(g, emb);
  if (!is_connected(g)) throw GraphError("face tracing needs a connected graph");

  std::vector<Face> faces;
  if (g.edge_count() == 0) {
    faces.emplace_back();
    return faces;
  }

  const auto index = rotation_index(emb);
  std::set<EdgeEnd> used;
  for (const auto& [v, ends] : emb.rotation) {
    for (const EdgeEnd& start : ends) {
      if (used.contains(start)) continue;
      Face face;
      EdgeEnd dart = start;
      do {
        used.insert(dart);
        face.push_back(dart);
        // Arrive at the far end, then turn to the next end clockwise there.
        EdgeEnd arrival{dart.edge, static_cast<std::uint8_t>(1 - dart.end)};
        VertexId at = vertex_at(g.edge(dart.edge), arrival.end);
        const auto& around = emb.rotation.at(at);
        dart = around[(index.at(arrival) + 1) % around.size()];
      } while (dart != start);
      faces.push_back(std::move(face));
    }
  }

  const auto v = static_cast<long>(g.vertex_count());
  const auto e = static_cast<long>(g.edge_count());
  const auto f = static_cast<long>(faces.size());
  if (v - e + f != 2)
    throw GraphError("rotation system is not planar: V - E + F = " + std::to_string(v - e + f));
  return faces;
}

DualGraph build_dual(const MoldGraph& g, const PlanarEmbedding& emb) {
  DualGraph dual;
  dual.faces = trace_faces(g, emb);

  std::map<EdgeEnd, VertexId> face_of;
  for (std::size_t f = 0; f < dual.faces.size(); ++f)
    for (const EdgeEnd& dart : dual.faces[f]) face_of.emplace(dart, static_cast<VertexId>(f));

  std::vector<Edge> dual_edges;
  for (EdgeId e : g.edge_ids()) {
    VertexId left = face_of.at({e, 0});
    VertexId right = face_of.at({e, 1});
    if (left == right) continue;
    auto id = static_cast<EdgeId>(dual_edges.size());
    dual_edges.push_back({id, left, right});
    dual.primal_to_dual.emplace(e, id);
    dual.dual_to_primal.emplace(id, e);
  }
  dual.graph = MoldGraph(dual.faces.size(), dual_edges);
  return dual;
}

}  // namespace noisy
