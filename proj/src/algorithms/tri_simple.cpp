#include <algorithm>

#include "tc/algorithms.hpp"
#include "tc/intersect.hpp"

namespace tc {
namespace {

// Neighbors of v with smaller id: the row of the strictly lower triangle.
std::span<const VertexId> lower_row(const CsrGraph& g, VertexId v) {
  auto nv = g.neighbors(v);
  auto end = std::lower_bound(nv.begin(), nv.end(), v);
  return nv.first(static_cast<std::size_t>(end - nv.begin()));
}

}  // namespace

TriangleCount count_tri_simple(const CsrGraph& g) {
  TriangleCount count = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto row_u = lower_row(g, u);
    for (VertexId v : row_u) count += intersect::merge(row_u, lower_row(g, v));
  }
  return count;
}

}  // namespace tc
