#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tc/graph.hpp"

namespace tc {

// BFS level of every vertex over a BFS forest (one tree per component).
struct LevelAssignment {
  std::vector<std::uint32_t> level;
  std::vector<VertexId> roots;
};

// Runs BFS from each still-unvisited vertex taken in `root_order` (identity
// order when empty). FIFO queue, neighbors expanded in adjacency order, so
// levels are fully determined by (g, root_order).
// Throws ContractError if a non-empty root_order is not a permutation of [0, n).
LevelAssignment bfs_forest(const CsrGraph& g,
                           std::span<const VertexId> root_order = {});

// Horizontal edges (equal level) go to g0, level-spanning edges to g1. Both
// graphs keep the full vertex set of g.
struct EdgePartition {
  CsrGraph g0;
  CsrGraph g1;
};

// Throws ContractError if the level array does not match g.
EdgePartition classify_edges(const CsrGraph& g, const LevelAssignment& levels);

// Number of horizontal edges, counted by scanning g directly.
EdgeIndex count_horizontal_edges(const CsrGraph& g, const LevelAssignment& levels);

// 100 * |E0| / m, or 0 for an edgeless partition.
double horizontal_fraction(const EdgePartition& p);

}  // namespace tc
