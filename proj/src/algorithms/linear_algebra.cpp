#include "tc/algorithms.hpp"
#include "tc/intersect.hpp"

namespace tc {

// Partition the adjacency matrix around row i into the block of earlier
// vertices (0) and later vertices (2). Triangles whose middle vertex is i are
// a10 * A20^T * a21: the earlier neighbors of i (hashed) against the
// earlier-than-i part of each later neighbor's row.
TriangleCount count_linear_algebra(const CsrGraph& g) {
  VertexHashSet earlier(g.num_vertices());
  TriangleCount count = 0;
  for (VertexId i = 0; i < g.num_vertices(); ++i) {
    auto row = g.neighbors(i);
    std::size_t k0 = 0;
    while (k0 < row.size() && row[k0] < i) earlier.insert(row[k0++]);
    if (!earlier.empty()) {
      for (std::size_t idx = k0; idx < row.size(); ++idx) {
        for (VertexId j : g.neighbors(row[idx])) {
          if (j >= i) break;
          count += earlier.contains(j);
        }
      }
    }
    earlier.clear();
  }
  return count;
}

}  // namespace tc
