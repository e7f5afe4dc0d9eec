#include "tc/bfs_partition.hpp"

#include <limits>

#include "tc/errors.hpp"

namespace tc {
namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

}  // namespace

LevelAssignment bfs_forest(const CsrGraph& g, std::span<const VertexId> root_order) {
  const VertexId n = g.num_vertices();
  if (!root_order.empty()) {
    if (root_order.size() != n)
      throw ContractError("root order length does not match vertex count");
    std::vector<char> seen(n, 0);
    for (VertexId v : root_order) {
      if (v >= n || seen[v]) throw ContractError("root order is not a permutation");
      seen[v] = 1;
    }
  }

  LevelAssignment out;
  out.level.assign(n, kUnvisited);
  std::vector<VertexId> queue(n);
  for (VertexId i = 0; i < n; ++i) {
    const VertexId root = root_order.empty() ? i : root_order[i];
    if (out.level[root] != kUnvisited) continue;
    out.roots.push_back(root);
    out.level[root] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const VertexId u = queue[head++];
      const std::uint32_t next = out.level[u] + 1;
      for (VertexId v : g.neighbors(u)) {
        if (out.level[v] == kUnvisited) {
          out.level[v] = next;
          queue[tail++] = v;
        }
      }
    }
  }
  return out;
}

EdgePartition classify_edges(const CsrGraph& g, const LevelAssignment& levels) {
  const VertexId n = g.num_vertices();
  if (levels.level.size() != n)
    throw ContractError("level array length does not match vertex count");
  const auto& level = levels.level;

  // Sizing pass, then a fill pass. Filtering a sorted slice keeps it sorted.
  std::vector<EdgeIndex> off0(std::size_t{n} + 1, 0);
  std::vector<EdgeIndex> off1(std::size_t{n} + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    EdgeIndex horizontal = 0;
    for (VertexId v : g.neighbors(u)) horizontal += level[u] == level[v];
    off0[u + 1] = off0[u] + horizontal;
    off1[u + 1] = off1[u] + (g.degree(u) - horizontal);
  }
  std::vector<VertexId> adj0(off0.back());
  std::vector<VertexId> adj1(off1.back());
  std::size_t i0 = 0, i1 = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (level[u] == level[v]) {
        adj0[i0++] = v;
      } else {
        adj1[i1++] = v;
      }
    }
  }
  return {CsrGraph::from_arrays_unchecked(std::move(off0), std::move(adj0)),
          CsrGraph::from_arrays_unchecked(std::move(off1), std::move(adj1))};
}

EdgeIndex count_horizontal_edges(const CsrGraph& g, const LevelAssignment& levels) {
  if (levels.level.size() != g.num_vertices())
    throw ContractError("level array length does not match vertex count");
  EdgeIndex count = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v && levels.level[u] == levels.level[v]) ++count;
    }
  }
  return count;
}

double horizontal_fraction(const EdgePartition& p) {
  const EdgeIndex m = p.g0.num_edges() + p.g1.num_edges();
  if (m == 0) return 0.0;
  return 100.0 * static_cast<double>(p.g0.num_edges()) / static_cast<double>(m);
}

}  // namespace tc
