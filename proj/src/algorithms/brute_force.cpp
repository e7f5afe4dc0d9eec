#include "tc/algorithms.hpp"

namespace tc {

TriangleCount count_brute_force(const CsrGraph& g) {
  const VertexId n = g.num_vertices();
  TriangleCount count = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (VertexId w = v + 1; w < n; ++w) {
        if (g.has_edge(u, w) && g.has_edge(v, w)) ++count;
      }
    }
  }
  return count;
}

}  // namespace tc
