#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace tc {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;
using TriangleCount = std::uint64_t;

// Raw ingested edges. May hold duplicates, self-loops and both orientations.
struct EdgeList {
  std::uint64_t n_hint = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

// Immutable undirected graph in compressed sparse row form.
//
// Every undirected edge {u, v} is stored twice (v in N(u), u in N(v)).
// Adjacency slices are strictly increasing and never contain their own vertex.
class CsrGraph {
 public:
  CsrGraph() : offsets_(1, 0) {}

  // Takes ownership of raw arrays and checks every CSR invariant.
  // Throws ContractError when one does not hold.
  static CsrGraph from_arrays(std::vector<EdgeIndex> offsets,
                              std::vector<VertexId> neighbors);

  // Same as from_arrays without the O(m log d) validation pass. For builders
  // whose output is correct by construction.
  static CsrGraph from_arrays_unchecked(std::vector<EdgeIndex> offsets,
                                        std::vector<VertexId> neighbors);

  VertexId num_vertices() const {
    return static_cast<VertexId>(offsets_.size() - 1);
  }
  EdgeIndex num_edges() const { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  VertexId degree(VertexId v) const {
    return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(VertexId u, VertexId v) const;

  std::span<const EdgeIndex> offsets() const { return offsets_; }
  std::span<const VertexId> adjacency() const { return neighbors_; }

  friend bool operator==(const CsrGraph&, const CsrGraph&) = default;

 private:
  CsrGraph(std::vector<EdgeIndex> offsets, std::vector<VertexId> neighbors)
      : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {}

  std::vector<EdgeIndex> offsets_;
  std::vector<VertexId> neighbors_;
};

// Throws ContractError naming the first violated CSR invariant.
void validate(std::span<const EdgeIndex> offsets,
              std::span<const VertexId> neighbors);

// Canonicalizes an edge list: drops self-loops, symmetrizes, collapses
// duplicates, sorts adjacency. n = max(n_hint, 1 + max id). Ids are kept as
// given; sparse ids become isolated vertices.
CsrGraph build_csr(const EdgeList& el);

// One (u, v) pair per undirected edge with u < v, in CSR scan order.
EdgeList to_edge_list(const CsrGraph& g);

struct Permutation {
  std::vector<VertexId> forward;  // old id -> new id
  std::vector<VertexId> inverse;  // new id -> old id

  static Permutation identity(VertexId n);
  // Builds the inverse from a forward map. Throws ContractError if not a
  // bijection on [0, n).
  static Permutation from_forward(std::vector<VertexId> forward);
  Permutation inverted() const { return {inverse, forward}; }
};

// Renames every vertex v to perm.forward[v] and re-sorts adjacency.
CsrGraph relabel(const CsrGraph& g, const Permutation& perm);

// Relabels so that degrees are non-increasing in the new ids. Ties keep
// ascending original id.
std::pair<CsrGraph, Permutation> degree_order(const CsrGraph& g);

struct GraphStats {
  VertexId n = 0;
  EdgeIndex m = 0;
  VertexId max_degree = 0;
  std::map<VertexId, VertexId> degree_histogram;  // degree -> vertex count
};

GraphStats graph_stats(const CsrGraph& g);

}  // namespace tc
