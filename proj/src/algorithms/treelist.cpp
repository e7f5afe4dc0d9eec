#include <limits>
#include <vector>

#include "tc/algorithms.hpp"

namespace tc {
namespace {

constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();

// Parent of every vertex in a BFS forest of g; roots get kNoParent.
std::vector<VertexId> bfs_parents(const CsrGraph& g) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> parent(n, kNoParent);
  std::vector<char> visited(n, 0);
  std::vector<VertexId> queue(n);
  for (VertexId root = 0; root < n; ++root) {
    if (visited[root] || g.degree(root) == 0) continue;
    visited[root] = 1;
    std::size_t head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const VertexId u = queue[head++];
      for (VertexId v : g.neighbors(u)) {
        if (!visited[v]) {
          visited[v] = 1;
          parent[v] = u;
          queue[tail++] = v;
        }
      }
    }
  }
  return parent;
}

}  // namespace

// Each round, a triangle with at least one tree edge is reported from its
// non-tree edge (x, y): through parent(x) when parent(x) ~ y, through
// parent(y) when parent(y) ~ x. With a BFS tree a triangle has at most two
// tree edges, and then both meet at a shared parent, so parent(x) == parent(y)
// is the only double report. Triangles with no tree edge survive to the next
// round intact.
TriangleCount count_treelist(const CsrGraph& g) {
  TriangleCount count = 0;
  CsrGraph current = g;
  while (current.num_edges() > 0) {
    const auto parent = bfs_parents(current);
    auto is_tree = [&](VertexId x, VertexId y) {
      return parent[x] == y || parent[y] == x;
    };

    const VertexId n = current.num_vertices();
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y : current.neighbors(x)) {
        if (y <= x || is_tree(x, y)) continue;
        const VertexId px = parent[x];
        const VertexId py = parent[y];
        if (px != kNoParent && current.has_edge(px, y)) ++count;
        if (py != kNoParent && py != px && current.has_edge(py, x)) ++count;
      }
    }

    std::vector<EdgeIndex> offsets(std::size_t{n} + 1, 0);
    std::vector<VertexId> adj;
    adj.reserve(current.adjacency().size());
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y : current.neighbors(x)) {
        if (!is_tree(x, y)) adj.push_back(y);
      }
      offsets[x + 1] = adj.size();
    }
    current = CsrGraph::from_arrays_unchecked(std::move(offsets), std::move(adj));
  }
  return count;
}

}  // namespace tc
