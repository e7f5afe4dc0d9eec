#include <vector>

#include "tc/algorithms.hpp"
#include "tc/intersect.hpp"

namespace tc {
namespace {

// Per-vertex append-only lists A(v) carved out of one arena of m slots.
// Vertex v gets room for its neighbors with smaller id, which bounds |A(v)|.
class ForwardSets {
 public:
  explicit ForwardSets(const CsrGraph& g)
      : begin_(std::size_t{g.num_vertices()} + 1, 0),
        size_(g.num_vertices(), 0),
        arena_(g.num_edges()) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      EdgeIndex lower = 0;
      for (VertexId u : g.neighbors(v)) {
        if (u >= v) break;
        ++lower;
      }
      begin_[v + 1] = begin_[v] + lower;
    }
  }

  std::span<const VertexId> operator[](VertexId v) const {
    return {arena_.data() + begin_[v], size_[v]};
  }
  void append(VertexId v, VertexId u) { arena_[begin_[v] + size_[v]++] = u; }

 private:
  std::vector<EdgeIndex> begin_;
  std::vector<VertexId> size_;
  std::vector<VertexId> arena_;
};

TriangleCount forward_hashed(const CsrGraph& g, std::uint64_t* probes) {
  ForwardSets a(g);
  VertexHashSet set(g.num_vertices());
  TriangleCount count = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    // A(u) is final once u is reached: only edges (x, u) with x < u feed it.
    set.load(a[u]);
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      if (probes) *probes += a[v].size();
      count += set.probe_count(a[v]);
      a.append(v, u);
    }
    set.clear();
  }
  return count;
}

}  // namespace

TriangleCount count_forward(const CsrGraph& g) {
  // u ascends, so every A(v) is appended in increasing order and stays sorted.
  ForwardSets a(g);
  TriangleCount count = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      count += intersect::merge(a[u], a[v]);
      a.append(v, u);
    }
  }
  return count;
}

TriangleCount count_forward_hashed(const CsrGraph& g, bool reorder) {
  if (reorder) return forward_hashed(degree_order(g).first, nullptr);
  return forward_hashed(g, nullptr);
}

TriangleCount count_forward_hashed_probed(const CsrGraph& g, std::uint64_t& probes) {
  return forward_hashed(g, &probes);
}

}  // namespace tc
