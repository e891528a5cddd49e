#include <gtest/gtest.h>

#include <random>

#include "noisy/embedding.hpp"
#include "noisy/instances.hpp"
#include "test_support.hpp"

namespace noisy {
namespace {

using test::cycle_embedding;
using test::cycle_graph;

int euler(const MoldGraph& g, std::size_t faces) {
  return static_cast<int>(g.vertex_count()) - static_cast<int>(g.edge_count()) +
         static_cast<int>(faces);
}

TEST(TraceFaces, Triangle) {
  auto faces = trace_faces(cycle_graph(3), cycle_embedding(3));
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(faces[0].size(), 3u);
  EXPECT_EQ(faces[1].size(), 3u);
}

TEST(TraceFaces, GridHasUnitSquaresPlusOuterFace) {
  Instance grid = gen_grid(3, 3, RealizationMode::Full, 0);
  auto faces = trace_faces(grid.graph, *grid.embedding);
  ASSERT_EQ(faces.size(), 5u);
  std::multiset<std::size_t> lengths;
  for (const Face& f : faces) lengths.insert(f.size());
  EXPECT_EQ(lengths, (std::multiset<std::size_t>{4, 4, 4, 4, 8}));
}

TEST(TraceFaces, TreeHasOneFace) {
  Instance tree = gen_random_tree(12, 3);
  auto faces = trace_faces(tree.graph, *tree.embedding);
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].size(), 2 * tree.graph.edge_count());
  Instance star = gen_star(6);
  EXPECT_EQ(trace_faces(star.graph, *star.embedding).size(), 1u);
}

TEST(TraceFaces, EveryDartIsUsedOnce) {
  Instance grid = gen_grid(4, 6, RealizationMode::Full, 0);
  std::set<EdgeEnd> seen;
  for (const Face& f : trace_faces(grid.graph, *grid.embedding))
    for (const EdgeEnd& d : f) EXPECT_TRUE(seen.insert(d).second);
  EXPECT_EQ(seen.size(), 2 * grid.graph.edge_count());
}

TEST(TraceFaces, EulerHoldsForAllGridsUpTo50) {
  for (std::uint32_t r = 1; r <= 50; ++r)
    for (std::uint32_t c = 1; c <= 50; ++c) {
      Instance grid = gen_grid(r, c, RealizationMode::Full, 0);
      auto faces = trace_faces(grid.graph, *grid.embedding);
      ASSERT_EQ(euler(grid.graph, faces.size()), 2) << r << "x" << c;
    }
}

TEST(TraceFaces, EulerHoldsForLadders) {
  for (std::uint32_t n : {1u, 2u, 7u, 64u}) {
    Instance ladder = gen_ladder(n, RealizationMode::Full, 0);
    auto faces = trace_faces(ladder.graph, *ladder.embedding);
    EXPECT_EQ(faces.size(), n + 1);
  }
}

TEST(TraceFaces, RejectsInconsistentRotations) {
  MoldGraph tri = cycle_graph(3);
  PlanarEmbedding missing = cycle_embedding(3);
  missing.rotation[0].pop_back();
  EXPECT_THROW(trace_faces(tri, missing), GraphError);

  PlanarEmbedding duplicated = cycle_embedding(3);
  duplicated.rotation[0].push_back(duplicated.rotation[0].front());
  EXPECT_THROW(trace_faces(tri, duplicated), GraphError);

  PlanarEmbedding misplaced = cycle_embedding(3);
  std::swap(misplaced.rotation[0][0], misplaced.rotation[1][0]);
  EXPECT_THROW(trace_faces(tri, misplaced), GraphError);
}

TEST(TraceFaces, RejectsNonPlanarRotation) {
  Instance grid = gen_grid(3, 3, RealizationMode::Full, 0);
  PlanarEmbedding twisted = *grid.embedding;
  auto& centre = twisted.rotation[4];  // up, right, down, left
  std::swap(centre[1], centre[2]);
  EXPECT_THROW(trace_faces(grid.graph, twisted), GraphError);
}

TEST(BuildDual, TriangleDualIsOneTripleSuperEdge) {
  DualGraph d = build_dual(cycle_graph(3), cycle_embedding(3));
  EXPECT_EQ(d.graph.vertex_count(), 2u);
  EXPECT_EQ(d.graph.edge_count(), 3u);
  ASSERT_EQ(d.graph.super_edge_count(), 1u);
  EXPECT_EQ(d.graph.super_edges()[0].edges.size(), 3u);
}

TEST(BuildDual, FourCycle) {
  DualGraph d = build_dual(cycle_graph(4), cycle_embedding(4));
  EXPECT_EQ(d.graph.vertex_count(), 2u);
  ASSERT_EQ(d.graph.super_edge_count(), 1u);
  EXPECT_EQ(d.graph.super_edges()[0].edges.size(), 4u);
}

TEST(BuildDual, TreeDualIsASingleVertex) {
  Instance tree = gen_random_tree(9, 1);
  DualGraph d = build_dual(tree.graph, *tree.embedding);
  EXPECT_EQ(d.graph.vertex_count(), 1u);
  EXPECT_EQ(d.graph.edge_count(), 0u);
  EXPECT_TRUE(d.primal_to_dual.empty());
}

TEST(BuildDual, GridDualJoinsFacesSharingAnEdge) {
  Instance grid = gen_grid(3, 3, RealizationMode::Full, 0);
  DualGraph d = build_dual(grid.graph, *grid.embedding);
  EXPECT_EQ(d.graph.vertex_count(), 5u);
  EXPECT_EQ(d.graph.edge_count(), 12u);
  // Each dual edge joins exactly the two faces whose boundary holds its primal edge.
  for (const Edge& de : d.graph.edges()) {
    const EdgeId pe = d.dual_to_primal.at(de.id);
    auto has = [&](std::size_t f) {
      for (const EdgeEnd& x : d.faces[f])
        if (x.edge == pe) return true;
      return false;
    };
    EXPECT_TRUE(has(de.u));
    EXPECT_TRUE(has(de.v));
  }
}

TEST(BuildDual, BijectionRoundTripsOnRandomSubgraphs) {
  // Drop random edges from grids (keeping them connected) so bridges appear.
  std::mt19937_64 rng(99);
  for (int round = 0; round < 30; ++round) {
    Instance grid = gen_grid(2 + round % 5, 2 + round % 4, RealizationMode::Full, 0);
    Instance tree = gen_grid(2 + round % 5, 2 + round % 4, RealizationMode::RandomSpanningTree,
                             static_cast<std::uint64_t>(round));
    std::vector<EdgeId> keep;
    for (EdgeId e : grid.graph.edge_ids())
      if (tree.realization.is_realized(e) || rng() % 2 == 0) keep.push_back(e);
    MoldGraph sub = grid.graph.edge_subgraph(keep);
    PlanarEmbedding emb;
    for (const auto& [v, rot] : grid.embedding->rotation)
      for (const EdgeEnd& x : rot)
        if (sub.has_edge(x.edge)) emb.rotation[v].push_back(x);
    for (VertexId v : sub.vertices()) emb.rotation[v];

    auto faces = trace_faces(sub, emb);
    ASSERT_EQ(euler(sub, faces.size()), 2);
    DualGraph d = build_dual(sub, emb);
    EXPECT_EQ(d.graph.vertex_count(), faces.size());
    EXPECT_EQ(d.primal_to_dual.size(), d.dual_to_primal.size());
    EXPECT_EQ(d.primal_to_dual.size(), d.graph.edge_count());
    for (const auto& [pe, de] : d.primal_to_dual) EXPECT_EQ(d.dual_to_primal.at(de), pe);
    // Every non-bridge edge has a dual; the rest are exactly the bridges.
    for (EdgeId e : sub.edge_ids()) {
      std::vector<EdgeId> others;
      for (EdgeId f : sub.edge_ids())
        if (f != e) others.push_back(f);
      const bool bridge = !is_connected(sub.edge_subgraph(others));
      EXPECT_EQ(d.primal_to_dual.contains(e), !bridge) << "edge " << e;
    }
  }
}

TEST(BuildDual, ComplementOfAPrimalTreeIsADualTree) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Instance grid = gen_grid(5, 6, RealizationMode::RandomSpanningTree, seed);
    DualGraph d = build_dual(grid.graph, *grid.embedding);
    std::set<EdgeId> dual_edges;
    for (EdgeId e : grid.graph.edge_ids())
      if (!grid.realization.is_realized(e)) dual_edges.insert(d.primal_to_dual.at(e));
    EXPECT_TRUE(is_spanning_tree(d.graph, dual_edges));
  }
}

}  // namespace
}  // namespace noisy
