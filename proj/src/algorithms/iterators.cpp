#include <algorithm>

#include "tc/algorithms.hpp"
#include "tc/intersect.hpp"

namespace tc {

TriangleCount count_vertex_iterator(const CsrGraph& g, bool directed) {
  const VertexId n = g.num_vertices();
  TriangleCount count = 0;
  if (!directed) {
    for (VertexId v = 0; v < n; ++v) {
      auto nv = g.neighbors(v);
      for (VertexId u : nv) {
        auto nu = g.neighbors(u);
        for (VertexId w : nv) {
          if (w != u && std::binary_search(nu.begin(), nu.end(), w)) ++count;
        }
      }
    }
    return count / 6;
  }
  for (VertexId v = 0; v < n; ++v) {
    auto nv = g.neighbors(v);
    const auto split = std::upper_bound(nv.begin(), nv.end(), v);
    for (auto ui = nv.begin(); ui != split; ++ui) {
      auto nu = g.neighbors(*ui);
      for (auto wi = split; wi != nv.end(); ++wi) {
        if (std::binary_search(nu.begin(), nu.end(), *wi)) ++count;
      }
    }
  }
  return count;
}

namespace {

template <typename Kernel>
TriangleCount sum_over_edges(const CsrGraph& g, bool directed, Kernel&& kernel) {
  TriangleCount total = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto nu = g.neighbors(u);
    for (VertexId v : nu) {
      if (directed && v <= u) continue;
      total += kernel(nu, g.neighbors(v));
    }
  }
  return directed ? total / 3 : total / 6;
}

}  // namespace

TriangleCount count_edge_iterator(const CsrGraph& g, IntersectKernel kernel,
                                  bool directed) {
  switch (kernel) {
    case IntersectKernel::kMerge:
      return sum_over_edges(g, directed, intersect::merge);
    case IntersectKernel::kBinary:
      return sum_over_edges(g, directed, intersect::binary);
    case IntersectKernel::kPartition:
      return sum_over_edges(g, directed, intersect::partition);
    case IntersectKernel::kHash:
      break;
  }

  // N(u) is loaded once and probed by every qualifying neighbor.
  VertexHashSet set(g.num_vertices());
  TriangleCount total = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto nu = g.neighbors(u);
    set.load(nu);
    for (VertexId v : nu) {
      if (directed && v <= u) continue;
      total += set.probe_count(g.neighbors(v));
    }
    set.clear();
  }
  return directed ? total / 3 : total / 6;
}

}  // namespace tc
