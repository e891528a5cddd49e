#include "noisy/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "noisy/oracle.hpp"
#include "noisy/union_find.hpp"

namespace noisy {
namespace {

constexpr std::uint64_t kInstanceStream = 0x1457a9ce;

std::mt19937_64 instance_rng(std::uint64_t seed) {
  return std::mt19937_64(mix_seed(seed, kInstanceStream));
}

// Spanning tree from a random edge order, Kruskal style.
std::set<EdgeId> random_spanning_tree(const MoldGraph& g, std::mt19937_64& rng) {
  std::vector<Edge> order = g.edges();
  std::shuffle(order.begin(), order.end(), rng);
  VertexUnion uf(g.vertices());
  std::set<EdgeId> tree;
  for (const Edge& e : order)
    if (uf.unite(e.u, e.v)) tree.insert(e.id);
  return tree;
}

std::set<EdgeId> all_edges(const MoldGraph& g) {
  auto ids = g.edge_ids();
  return {ids.begin(), ids.end()};
}

[[noreturn]] void bad_mode(std::string_view family, RealizationMode mode) {
  throw std::invalid_argument("realization mode '" + std::string(to_string(mode)) +
                              "' does not apply to " + std::string(family) + " instances");
}

// Any rotation of a tree is planar.
PlanarEmbedding tree_embedding(const MoldGraph& g) {
  PlanarEmbedding emb;
  for (VertexId v : g.vertices()) emb.rotation[v];
  for (const Edge& e : g.edges()) {
    emb.rotation[e.u].push_back({e.id, 0});
    emb.rotation[e.v].push_back({e.id, 1});
  }
  return emb;
}

}  // namespace

std::string_view to_string(RealizationMode mode) {
  switch (mode) {
    case RealizationMode::RandomSpanningTree: return "random-tree";
    case RealizationMode::SnakePath: return "snake";
    case RealizationMode::LadderAlternating: return "two-sided-lb";
    case RealizationMode::FPHalfPairs: return "fp-lb";
    case RealizationMode::Full: return "full";
  }
  return "?";
}

RealizationMode parse_realization_mode(std::string_view name) {
  if (name == "random-tree") return RealizationMode::RandomSpanningTree;
  if (name == "snake") return RealizationMode::SnakePath;
  if (name == "two-sided-lb") return RealizationMode::LadderAlternating;
  if (name == "fp-lb") return RealizationMode::FPHalfPairs;
  if (name == "full") return RealizationMode::Full;
  throw std::invalid_argument("unknown realization mode '" + std::string(name) + "'");
}

Instance gen_grid(std::uint32_t rows, std::uint32_t cols, RealizationMode mode,
                  std::uint64_t seed) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid needs rows, cols >= 1");
  auto vid = [cols](std::uint32_t r, std::uint32_t c) { return r * cols + c; };
  const std::uint32_t horizontal = rows * (cols - 1);
  auto hid = [&](std::uint32_t r, std::uint32_t c) { return r * (cols - 1) + c; };
  auto vert = [&](std::uint32_t r, std::uint32_t c) { return horizontal + r * cols + c; };

  std::vector<Edge> edges;
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c + 1 < cols; ++c) edges.push_back({hid(r, c), vid(r, c), vid(r, c + 1)});
  for (std::uint32_t r = 0; r + 1 < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) edges.push_back({vert(r, c), vid(r, c), vid(r + 1, c)});
  MoldGraph g(static_cast<std::size_t>(rows) * cols, edges);

  PlanarEmbedding emb;
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      auto& rot = emb.rotation[vid(r, c)];
      if (r > 0) rot.push_back({vert(r - 1, c), 1});
      if (c + 1 < cols) rot.push_back({hid(r, c), 0});
      if (r + 1 < rows) rot.push_back({vert(r, c), 0});
      if (c > 0) rot.push_back({hid(r, c - 1), 1});
    }
  }

  std::set<EdgeId> realized;
  switch (mode) {
    case RealizationMode::RandomSpanningTree: {
      auto rng = instance_rng(seed);
      realized = random_spanning_tree(g, rng);
      break;
    }
    case RealizationMode::SnakePath:
      for (std::uint32_t id = 0; id < horizontal; ++id) realized.insert(id);
      for (std::uint32_t r = 0; r + 1 < rows; ++r)
        realized.insert(vert(r, r % 2 == 0 ? cols - 1 : 0));
      break;
    case RealizationMode::Full:
      realized = all_edges(g);
      break;
    default:
      bad_mode("grid", mode);
  }
  Realization realization(g, std::move(realized));
  return {std::move(g), std::move(emb), std::move(realization)};
}

Instance gen_ladder(std::uint32_t n, RealizationMode mode, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("ladder needs n >= 1");
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    edges.push_back({2 * i, i, i + 1});
    edges.push_back({2 * i + 1, i, i + 1});
  }
  MoldGraph g(n + 1, edges);

  // Vertices on a line, edge 2i arcing above and 2i+1 below; clockwise from
  // the top: upper-right, lower-right, lower-left, upper-left.
  PlanarEmbedding emb;
  for (std::uint32_t v = 0; v <= n; ++v) {
    auto& rot = emb.rotation[v];
    if (v < n) {
      rot.push_back({2 * v, 0});
      rot.push_back({2 * v + 1, 0});
    }
    if (v > 0) {
      rot.push_back({2 * v - 1, 1});
      rot.push_back({2 * v - 2, 1});
    }
  }

  auto rng = instance_rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::set<EdgeId> realized;
  switch (mode) {
    case RealizationMode::LadderAlternating:
      for (std::uint32_t i = 0; i < n; ++i) realized.insert(2 * i + (coin(rng) ? 1 : 0));
      break;
    case RealizationMode::FPHalfPairs: {
      std::vector<std::uint32_t> pairs(n);
      std::iota(pairs.begin(), pairs.end(), 0u);
      std::shuffle(pairs.begin(), pairs.end(), rng);
      std::vector<bool> single(n, false);
      for (std::uint32_t k = 0; k < n / 2; ++k) single[pairs[k]] = true;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (single[i]) {
          realized.insert(2 * i + (coin(rng) ? 1 : 0));
        } else {
          realized.insert(2 * i);
          realized.insert(2 * i + 1);
        }
      }
      break;
    }
    case RealizationMode::Full:
      realized = all_edges(g);
      break;
    default:
      bad_mode("ladder", mode);
  }
  Realization realization(g, std::move(realized));
  return {std::move(g), std::move(emb), std::move(realization)};
}

Instance gen_complete(std::uint32_t n, RealizationMode mode, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      edges.push_back({static_cast<EdgeId>(edges.size()), i, j});
  MoldGraph g(n, edges);

  std::set<EdgeId> realized;
  if (mode == RealizationMode::RandomSpanningTree) {
    auto rng = instance_rng(seed);
    realized = random_spanning_tree(g, rng);
  } else if (mode == RealizationMode::Full) {
    realized = all_edges(g);
  } else {
    bad_mode("complete", mode);
  }
  Realization realization(g, std::move(realized));
  return {std::move(g), std::nullopt, std::move(realization)};
}

Instance gen_star(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("star needs n >= 1");
  std::vector<Edge> edges;
  for (std::uint32_t i = 1; i < n; ++i) edges.push_back({i - 1, 0, i});
  MoldGraph g(n, edges);
  PlanarEmbedding emb = tree_embedding(g);
  Realization realization(g, all_edges(g));
  return {std::move(g), std::move(emb), std::move(realization)};
}

Instance gen_random_tree(std::uint32_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("tree needs n >= 1");
  auto rng = instance_rng(seed);
  std::vector<Edge> edges;
  for (std::uint32_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::uint32_t> parent(0, i - 1);
    edges.push_back({i - 1, parent(rng), i});
  }
  MoldGraph g(n, edges);
  PlanarEmbedding emb = tree_embedding(g);
  Realization realization(g, all_edges(g));
  return {std::move(g), std::move(emb), std::move(realization)};
}

std::string family_name(const Family& family) {
  struct Visitor {
    std::string operator()(const GridFamily&) const { return "grid"; }
    std::string operator()(const LadderFamily&) const { return "ladder"; }
    std::string operator()(const CompleteFamily&) const { return "complete"; }
    std::string operator()(const StarFamily&) const { return "star"; }
    std::string operator()(const TreeFamily&) const { return "tree"; }
  };
  return std::visit(Visitor{}, family);
}

Instance generate(const InstanceSpec& spec) {
  struct Visitor {
    const InstanceSpec& spec;
    Instance operator()(const GridFamily& f) const {
      return gen_grid(f.rows, f.cols, spec.realization, spec.seed);
    }
    Instance operator()(const LadderFamily& f) const {
      return gen_ladder(f.n, spec.realization, spec.seed);
    }
    Instance operator()(const CompleteFamily& f) const {
      return gen_complete(f.n, spec.realization, spec.seed);
    }
    Instance operator()(const StarFamily& f) const { return gen_star(f.n); }
    Instance operator()(const TreeFamily& f) const { return gen_random_tree(f.n, spec.seed); }
  };
  return std::visit(Visitor{spec}, spec.family);
}

}  // namespace noisy
