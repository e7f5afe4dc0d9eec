#pragma once

#include <cstdint>

#include "tc/graph.hpp"

// Sequential triangle counting over a read-only CsrGraph. Every routine
// returns the exact number of unordered triangles and allocates its own
// scratch, released before returning.
namespace tc {

// Triple loop over u < v < w with adjacency lookups. Test oracle only.
TriangleCount count_brute_force(const CsrGraph& g);

// Itai-Rodeh tree listing: BFS spanning forest, triangles through each
// non-tree edge found via tree parents, tree edges deleted, repeat.
TriangleCount count_treelist(const CsrGraph& g);

// Enumerates 2-paths around each center and checks the closing edge by binary
// search. Undirected: every ordered pair of neighbors, sum / 6. Directed: only
// paths u < v < w with v the center, each triangle once.
TriangleCount count_vertex_iterator(const CsrGraph& g, bool directed);

enum class IntersectKernel { kMerge, kBinary, kPartition, kHash };

// Sums |N(u) ∩ N(v)| over every adjacency entry (divide by 6) or over u < v
// only (divide by 3).
TriangleCount count_edge_iterator(const CsrGraph& g, IntersectKernel kernel,
                                  bool directed);

// Schank-Wagner forward: for each edge u < v in CSR scan order, merge
// A(u) ∩ A(v), then append u to A(v).
TriangleCount count_forward(const CsrGraph& g);

// Forward with the A-set intersection done through a VertexHashSet. With
// reorder, the graph is first relabeled by non-increasing degree.
TriangleCount count_forward_hashed(const CsrGraph& g, bool reorder);
// Same count; adds every hash lookup to `probes`.
TriangleCount count_forward_hashed_probed(const CsrGraph& g, std::uint64_t& probes);

// Row dot products of the strictly lower triangle: for each u and each
// v ∈ N(u) with v < u, merge the lower parts of N(u) and N(v).
TriangleCount count_tri_simple(const CsrGraph& g);

// Forward-hashed traversal expressed row-wise: at vertex i the earlier
// neighbors are hashed and each later neighbor k probes its own neighbors
// below i. Each triangle is counted at its middle vertex.
TriangleCount count_linear_algebra(const CsrGraph& g);

// Cover-edge counting: BFS levels, then for each horizontal edge u < v every
// common neighbor w is counted unless it is on the same level with w < v.
TriangleCount count_cover_edge(const CsrGraph& g, bool reorder);

// How count_fast picks, for each horizontal edge, which endpoint's G1
// neighborhood is hashed and which one is probed.
enum class FastOrientation {
  // The endpoint with the larger G1 degree is hashed and the other probed
  // (ties go to the smaller id). Probe cost per edge is min(d1(u), d1(v)).
  kProbeSmaller,
  // Hash N1(u), probe N1(v) for u < v. The plain id orientation.
  kById,
};

struct FastTrace {
  TriangleCount triangles = 0;
  TriangleCount g0_triangles = 0;   // found by forward-hashed inside G0
  std::uint64_t g0_probes = 0;      // hash lookups inside G0
  std::uint64_t cross_probes = 0;   // hash lookups in the G1 phase
  EdgeIndex horizontal_edges = 0;
};

// BFS levels split E into horizontal G0 and level-spanning G1. Triangles
// inside G0 come from forward-hashed; every other triangle has exactly one
// horizontal edge (u, v) and its apex lies in N1(u) ∩ N1(v), found by hashing.
TriangleCount count_fast(const CsrGraph& g, bool reorder,
                         FastOrientation orientation = FastOrientation::kProbeSmaller);

FastTrace count_fast_traced(const CsrGraph& g, bool reorder,
                            FastOrientation orientation = FastOrientation::kProbeSmaller);

}  // namespace tc
