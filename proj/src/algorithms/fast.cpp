#include "tc/algorithms.hpp"
#include "tc/bfs_partition.hpp"
#include "tc/intersect.hpp"

namespace tc {
namespace {

FastTrace fast(const CsrGraph& g, FastOrientation orientation) {
  const EdgePartition parts = classify_edges(g, bfs_forest(g));
  const CsrGraph& g0 = parts.g0;
  const CsrGraph& g1 = parts.g1;

  FastTrace trace;
  trace.horizontal_edges = g0.num_edges();
  trace.g0_triangles = count_forward_hashed_probed(g0, trace.g0_probes);

  // Each horizontal edge is handled once, from the endpoint whose G1
  // neighborhood sits in the hash.
  auto hashed_side = [&](VertexId u, VertexId v) {
    if (orientation == FastOrientation::kById) return u < v;
    const VertexId du = g1.degree(u);
    const VertexId dv = g1.degree(v);
    return du > dv || (du == dv && u < v);
  };

  VertexHashSet set(g.num_vertices());
  TriangleCount cross = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g0.neighbors(u)) {
      if (!hashed_side(u, v)) continue;
      if (set.empty()) set.load(g1.neighbors(u));
      auto probe = g1.neighbors(v);
      trace.cross_probes += probe.size();
      cross += set.probe_count(probe);
    }
    set.clear();
  }
  trace.triangles = trace.g0_triangles + cross;
  return trace;
}

}  // namespace

FastTrace count_fast_traced(const CsrGraph& g, bool reorder,
                            FastOrientation orientation) {
  if (reorder) return fast(degree_order(g).first, orientation);
  return fast(g, orientation);
}

TriangleCount count_fast(const CsrGraph& g, bool reorder, FastOrientation orientation) {
  return count_fast_traced(g, reorder, orientation).triangles;
}

}  // namespace tc
