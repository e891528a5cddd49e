#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "noisy/graph.hpp"

namespace noisy {

/// One end of a simple edge: end 0 sits at the edge's `u`, end 1 at its `v`.
struct EdgeEnd {
  EdgeId edge;
  std::uint8_t end;

  auto operator<=>(const EdgeEnd&) const = default;
};

/// Combinatorial embedding: clockwise cyclic order of edge-ends per vertex.
struct PlanarEmbedding {
  std::map<VertexId, std::vector<EdgeEnd>> rotation;
};

/// A face boundary as the cyclic sequence of darts walked along it. Dart
/// (e, s) leaves the vertex at end s of e.
using Face = std::vector<EdgeEnd>;

/// Checks that every edge-end of g appears exactly once, at the right vertex.
/// Throws GraphError otherwise.
void validate_rotation(const MoldGraph& g, const PlanarEmbedding& emb);

/// Traces all faces of a connected embedded graph. Throws GraphError if the
/// rotation system is inconsistent or the face count violates Euler's formula
/// (which is what a non-planar rotation system produces).
std::vector<Face> trace_faces(const MoldGraph& g, const PlanarEmbedding& emb);

struct DualGraph {
  /// Vertices are face indices into `faces`.
  MoldGraph graph;
  std::vector<Face> faces;
  std::map<EdgeId, EdgeId> primal_to_dual;
  std::map<EdgeId, EdgeId> dual_to_primal;
};

/// Face-adjacency dual. Bridges border the same face on both sides and would
/// become self-loops, so they have no dual edge; every other primal edge maps
/// to exactly one dual edge. Dual edge ids are dense, in primal id order.
DualGraph build_dual(const MoldGraph& g, const PlanarEmbedding& emb);

}  // namespace noisy
