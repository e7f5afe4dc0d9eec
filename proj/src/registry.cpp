#include "tc/registry.hpp"

#include <vector>

#include "tc/algorithms.hpp"
#include "tc/errors.hpp"

namespace tc {
namespace {

std::vector<Algorithm> make_registry() {
  using K = IntersectKernel;
  auto edge = [](K kernel, bool directed) {
    return [=](const CsrGraph& g) { return count_edge_iterator(g, kernel, directed); };
  };
  return {
      {"IR", "Treelist (Itai-Rodeh)", count_treelist},
      {"V", "Vertex iterator", [](const CsrGraph& g) { return count_vertex_iterator(g, false); }},
      {"VD", "Vertex iterator, direction-oriented",
       [](const CsrGraph& g) { return count_vertex_iterator(g, true); }},
      {"EM", "Edge iterator, MergePath", edge(K::kMerge, false)},
      {"EMD", "Edge iterator, MergePath, direction-oriented", edge(K::kMerge, true)},
      {"EB", "Edge iterator, BinarySearch", edge(K::kBinary, false)},
      {"EBD", "Edge iterator, BinarySearch, direction-oriented", edge(K::kBinary, true)},
      {"EP", "Edge iterator, Partitioning", edge(K::kPartition, false)},
      {"EPD", "Edge iterator, Partitioning, direction-oriented", edge(K::kPartition, true)},
      {"EH", "Edge iterator, Hashing", edge(K::kHash, false)},
      {"EHD", "Edge iterator, Hashing, direction-oriented", edge(K::kHash, true)},
      {"F", "Forward", count_forward},
      {"FH", "Forward with hashing",
       [](const CsrGraph& g) { return count_forward_hashed(g, false); }},
      {"FHD", "Forward with hashing, degree-ordered",
       [](const CsrGraph& g) { return count_forward_hashed(g, true); }},
      {"TS", "tri_simple (lower-triangular row dot products)", count_tri_simple},
      {"LA", "Linear algebra (row-wise forward-hashed)", count_linear_algebra},
      {"CE", "Cover edge", [](const CsrGraph& g) { return count_cover_edge(g, false); }},
      {"CED", "Cover edge, degree-ordered",
       [](const CsrGraph& g) { return count_cover_edge(g, true); }},
      {"Bader", "Fast triangle counting (cover edge + forward hashed)",
       [](const CsrGraph& g) { return count_fast(g, false); }},
      {"BaderD", "Fast triangle counting, degree-ordered",
       [](const CsrGraph& g) { return count_fast(g, true); }},
  };
}

}  // namespace

std::span<const Algorithm> registry() {
  static const std::vector<Algorithm> algorithms = make_registry();
  return algorithms;
}

const Algorithm* find_algorithm(std::string_view key) {
  for (const auto& a : registry()) {
    if (a.key == key) return &a;
  }
  return nullptr;
}

std::vector<Algorithm> parse_algorithm_list(std::string_view keys) {
  if (keys == "all") return {registry().begin(), registry().end()};
  std::vector<Algorithm> out;
  while (!keys.empty()) {
    const auto comma = keys.find(',');
    std::string_view key = keys.substr(0, comma);
    keys = comma == std::string_view::npos ? std::string_view{} : keys.substr(comma + 1);
    while (!key.empty() && key.front() == ' ') key.remove_prefix(1);
    while (!key.empty() && key.back() == ' ') key.remove_suffix(1);
    if (key.empty()) continue;
    const Algorithm* a = find_algorithm(key);
    if (a == nullptr) throw UsageError("unknown algorithm key '" + std::string(key) + "'");
    out.push_back(*a);
  }
  if (out.empty()) throw UsageError("empty algorithm list");
  return out;
}

}  // namespace tc
