#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "noisy/embedding.hpp"
#include "noisy/graph.hpp"

namespace noisy {

struct Instance {
  MoldGraph graph;
  std::optional<PlanarEmbedding> embedding;
  Realization realization;
};

enum class RealizationMode {
  RandomSpanningTree,
  SnakePath,
  /// Ladder: exactly one realized edge per parallel pair.
  LadderAlternating,
  /// Ladder: half the pairs have one realized edge, the rest both.
  FPHalfPairs,
  /// Every edge realized.
  Full,
};

std::string_view to_string(RealizationMode mode);
RealizationMode parse_realization_mode(std::string_view name);

/// rows x cols grid. Vertex (r, c) has id r*cols + c. Horizontal edge
/// (r,c)-(r,c+1) has id r*(cols-1) + c; vertical edge (r,c)-(r+1,c) follows
/// all horizontals at rows*(cols-1) + r*cols + c. Rotations list up, right,
/// down, left. Modes: RandomSpanningTree, SnakePath, Full.
Instance gen_grid(std::uint32_t rows, std::uint32_t cols, RealizationMode mode,
                  std::uint64_t seed);

/// Path of n+1 vertices where consecutive vertices i, i+1 are joined by the
/// parallel pair 2i, 2i+1. Modes: LadderAlternating, FPHalfPairs, Full.
Instance gen_ladder(std::uint32_t n, RealizationMode mode, std::uint64_t seed);

/// K_n with edges numbered in lexicographic (i < j) order. Not planar for
/// n >= 5, so no embedding is attached. Modes: RandomSpanningTree, Full.
Instance gen_complete(std::uint32_t n, RealizationMode mode, std::uint64_t seed);

/// K_{1,n-1} centred on vertex 0; edge i-1 joins 0 and i. Fully realized.
Instance gen_star(std::uint32_t n);

/// Random recursive tree on n vertices: vertex i >= 1 hangs off a uniform
/// earlier vertex via edge i-1. Fully realized.
Instance gen_random_tree(std::uint32_t n, std::uint64_t seed);

struct GridFamily {
  std::uint32_t rows;
  std::uint32_t cols;
};
struct LadderFamily {
  std::uint32_t n;
};
struct CompleteFamily {
  std::uint32_t n;
};
struct StarFamily {
  std::uint32_t n;
};
struct TreeFamily {
  std::uint32_t n;
};

using Family = std::variant<GridFamily, LadderFamily, CompleteFamily, StarFamily, TreeFamily>;

std::string family_name(const Family& family);

struct InstanceSpec {
  Family family;
  RealizationMode realization = RealizationMode::RandomSpanningTree;
  std::uint64_t seed = 0;
};

Instance generate(const InstanceSpec& spec);

}  // namespace noisy
