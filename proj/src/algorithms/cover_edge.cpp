#include "tc/algorithms.hpp"
#include "tc/bfs_partition.hpp"
#include "tc/intersect.hpp"

namespace tc {
namespace {

TriangleCount cover_edge(const CsrGraph& g) {
  const auto level = bfs_forest(g).level;
  VertexHashSet set(g.num_vertices());
  TriangleCount count = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto nu = g.neighbors(u);
    for (VertexId v : nu) {
      if (v <= u || level[u] != level[v]) continue;
      if (set.empty()) set.load(nu);
      // A same-level witness closes an all-horizontal triangle, which is
      // counted only from its two smallest ids (u < v < w).
      set.probe_visit(g.neighbors(v), [&](VertexId w) {
        if (level[w] != level[u] || v < w) ++count;
      });
    }
    set.clear();
  }
  return count;
}

}  // namespace

TriangleCount count_cover_edge(const CsrGraph& g, bool reorder) {
  if (reorder) return cover_edge(degree_order(g).first);
  return cover_edge(g);
}

}  // namespace tc
