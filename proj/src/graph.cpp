#include "tc/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "tc/errors.hpp"

namespace tc {

CsrGraph CsrGraph::from_arrays(std::vector<EdgeIndex> offsets,
                               std::vector<VertexId> neighbors) {
  validate(offsets, neighbors);
  return CsrGraph(std::move(offsets), std::move(neighbors));
}

CsrGraph CsrGraph::from_arrays_unchecked(std::vector<EdgeIndex> offsets,
                                         std::vector<VertexId> neighbors) {
  return CsrGraph(std::move(offsets), std::move(neighbors));
}

bool CsrGraph::has_edge(VertexId u, VertexId v) const {
  auto nu = neighbors(u);
  auto nv = neighbors(v);
  if (nv.size() < nu.size()) return std::binary_search(nv.begin(), nv.end(), u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

void validate(std::span<const EdgeIndex> offsets,
              std::span<const VertexId> neighbors) {
  if (offsets.empty()) throw ContractError("offsets array is empty");
  if (offsets.front() != 0) throw ContractError("offsets[0] != 0");
  if (offsets.back() != neighbors.size())
    throw ContractError("offsets[n] != length of neighbor array");
  if (neighbors.size() % 2 != 0)
    throw ContractError("odd neighbor count; edges must be stored twice");
  const std::size_t n = offsets.size() - 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets[v] > offsets[v + 1])
      throw ContractError("offsets decrease at vertex " + std::to_string(v));
  }
  auto slice = [&](std::size_t v) {
    return neighbors.subspan(offsets[v], offsets[v + 1] - offsets[v]);
  };
  for (std::size_t v = 0; v < n; ++v) {
    auto nv = slice(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      if (nv[i] >= n)
        throw ContractError("neighbor id out of range at vertex " +
                            std::to_string(v));
      if (nv[i] == v)
        throw ContractError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && nv[i - 1] >= nv[i])
        throw ContractError("adjacency of vertex " + std::to_string(v) +
                            " not strictly increasing");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (VertexId u : slice(v)) {
      auto nu = slice(u);
      if (!std::binary_search(nu.begin(), nu.end(), static_cast<VertexId>(v)))
        throw ContractError("asymmetric edge " + std::to_string(v) + "->" +
                            std::to_string(u));
    }
  }
}

CsrGraph build_csr(const EdgeList& el) {
  std::uint64_t n = el.n_hint;
  for (auto [u, v] : el.edges) n = std::max<std::uint64_t>(n, std::max(u, v) + std::uint64_t{1});
  if (n > std::numeric_limits<VertexId>::max())
    throw CapacityError("vertex count " + std::to_string(n) + " exceeds the 32-bit id space");

  // Counting sort into buckets by source, then sort + dedup each bucket.
  std::vector<EdgeIndex> offsets(n + 1, 0);
  for (auto [u, v] : el.edges) {
    if (u == v) continue;
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<VertexId> scratch(offsets.back());
  std::vector<EdgeIndex> cursor(offsets.begin(), offsets.end() - 1);
  for (auto [u, v] : el.edges) {
    if (u == v) continue;
    scratch[cursor[u]++] = v;
    scratch[cursor[v]++] = u;
  }

  std::vector<EdgeIndex> out_offsets(n + 1, 0);
  std::vector<VertexId> out;
  out.reserve(scratch.size());
  for (std::uint64_t v = 0; v < n; ++v) {
    auto first = scratch.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = scratch.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    out.insert(out.end(), first, last);
    out_offsets[v + 1] = out.size();
  }
  out.shrink_to_fit();
  return CsrGraph::from_arrays_unchecked(std::move(out_offsets), std::move(out));
}

EdgeList to_edge_list(const CsrGraph& g) {
  EdgeList el;
  el.n_hint = g.num_vertices();
  el.edges.reserve(g.num_edges());
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v) el.edges.emplace_back(u, v);
    }
  }
  return el;
}

Permutation Permutation::identity(VertexId n) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return {ids, ids};
}

Permutation Permutation::from_forward(std::vector<VertexId> forward) {
  const std::size_t n = forward.size();
  std::vector<VertexId> inverse(n);
  std::vector<char> seen(n, 0);
  for (std::size_t old = 0; old < n; ++old) {
    VertexId nu = forward[old];
    if (nu >= n || seen[nu]) throw ContractError("forward map is not a bijection");
    seen[nu] = 1;
    inverse[nu] = static_cast<VertexId>(old);
  }
  return {std::move(forward), std::move(inverse)};
}

CsrGraph relabel(const CsrGraph& g, const Permutation& perm) {
  const VertexId n = g.num_vertices();
  if (perm.forward.size() != n || perm.inverse.size() != n)
    throw ContractError("permutation size does not match vertex count");

  std::vector<EdgeIndex> offsets(std::size_t{n} + 1, 0);
  for (VertexId nv = 0; nv < n; ++nv)
    offsets[nv + 1] = offsets[nv] + g.degree(perm.inverse[nv]);
  std::vector<VertexId> adj(offsets.back());
  for (VertexId nv = 0; nv < n; ++nv) {
    auto out = adj.begin() + static_cast<std::ptrdiff_t>(offsets[nv]);
    auto it = out;
    for (VertexId old : g.neighbors(perm.inverse[nv])) *it++ = perm.forward[old];
    std::sort(out, it);
  }
  return CsrGraph::from_arrays_unchecked(std::move(offsets), std::move(adj));
}

std::pair<CsrGraph, Permutation> degree_order(const CsrGraph& g) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> inverse(n);
  std::iota(inverse.begin(), inverse.end(), VertexId{0});
  std::stable_sort(inverse.begin(), inverse.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<VertexId> forward(n);
  for (VertexId nv = 0; nv < n; ++nv) forward[inverse[nv]] = nv;
  Permutation perm{std::move(forward), std::move(inverse)};
  CsrGraph out = relabel(g, perm);
  return {std::move(out), std::move(perm)};
}

GraphStats graph_stats(const CsrGraph& g) {
  GraphStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  for (VertexId v = 0; v < s.n; ++v) {
    VertexId d = g.degree(v);
    s.max_degree = std::max(s.max_degree, d);
    ++s.degree_histogram[d];
  }
  return s;
}

}  // namespace tc
