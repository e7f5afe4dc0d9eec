#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "tc/errors.hpp"
#include "tc/graph.hpp"

// Set-intersection kernels over sorted vertex-id slices. Each kernel has a
// counting form and a visitor form that calls fn(w) for every common id in
// ascending order.
namespace tc::intersect {

using Slice = std::span<const VertexId>;

// Two-pointer scan. O(|a| + |b|).
template <typename Fn>
void merge_visit(Slice a, Slice b, Fn&& fn) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      fn(a[i]);
      ++i;
      ++j;
    }
  }
}

inline std::uint64_t merge(Slice a, Slice b) {
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Probes each element of the shorter slice into the longer one.
// O(min * log max). Operand order does not matter.
template <typename Fn>
void binary_visit(Slice a, Slice b, Fn&& fn) {
  if (a.size() > b.size()) std::swap(a, b);
  // The probe keys ascend, so each search can start where the last one ended.
  auto lo = b.begin();
  for (VertexId x : a) {
    lo = std::lower_bound(lo, b.end(), x);
    if (lo == b.end()) return;
    if (*lo == x) fn(x);
  }
}

inline std::uint64_t binary(Slice a, Slice b) {
  std::uint64_t count = 0;
  binary_visit(a, b, [&count](VertexId) { ++count; });
  return count;
}

namespace detail {

template <typename Fn>
void partition_rec(Slice small, Slice large, Fn& fn) {
  if (small.empty() || large.empty()) return;
  if (small.size() > large.size()) std::swap(small, large);
  const std::size_t mid = small.size() / 2;
  const VertexId pivot = small[mid];
  auto pos = std::lower_bound(large.begin(), large.end(), pivot);
  const std::size_t k = static_cast<std::size_t>(pos - large.begin());
  const bool hit = pos != large.end() && *pos == pivot;
  partition_rec(small.first(mid), large.first(k), fn);
  if (hit) fn(pivot);
  partition_rec(small.subspan(mid + 1), large.subspan(k + (hit ? 1 : 0)), fn);
}

}  // namespace detail

// Divide and conquer: split the shorter slice at its median, locate the median
// in the longer slice by binary search, recurse on the two halves. Visits in
// ascending order.
template <typename Fn>
void partition_visit(Slice a, Slice b, Fn&& fn) {
  detail::partition_rec(a, b, fn);
}

inline std::uint64_t partition(Slice a, Slice b) {
  std::uint64_t count = 0;
  partition_visit(a, b, [&count](VertexId) { ++count; });
  return count;
}

}  // namespace tc::intersect

namespace tc {

// Boolean membership table over vertex ids [0, n) that remembers which slots
// it set, so clear() costs O(|touched|) rather than O(n).
//
// load() requires the set to be empty. Not shareable while in use.
class VertexHashSet {
 public:
  explicit VertexHashSet(VertexId n) : present_(n, 0) { touched_.reserve(64); }

  VertexId capacity() const { return static_cast<VertexId>(present_.size()); }
  bool empty() const { return touched_.empty(); }
  std::size_t size() const { return touched_.size(); }
  std::span<const VertexId> touched() const { return touched_; }

  void load(std::span<const VertexId> ids) {
    if (!touched_.empty())
      throw ContractError("VertexHashSet::load on a non-empty set");
    for (VertexId v : ids) insert(v);
  }

  void insert(VertexId v) {
    if (!present_[v]) {
      present_[v] = 1;
      touched_.push_back(v);
    }
  }

  bool contains(VertexId v) const { return present_[v] != 0; }

  std::uint64_t probe_count(std::span<const VertexId> ids) const {
    std::uint64_t count = 0;
    for (VertexId v : ids) count += present_[v];
    return count;
  }

  template <typename Fn>
  void probe_visit(std::span<const VertexId> ids, Fn&& fn) const {
    for (VertexId v : ids) {
      if (present_[v]) fn(v);
    }
  }

  void clear() {
    for (VertexId v : touched_) present_[v] = 0;
    touched_.clear();
  }

 private:
  std::vector<unsigned char> present_;
  std::vector<VertexId> touched_;
};

namespace intersect {

// Loads `a` into a caller-owned empty set, probes `b`, clears again.
inline std::uint64_t hash(VertexHashSet& set, Slice a, Slice b) {
  set.load(a);
  std::uint64_t count = set.probe_count(b);
  set.clear();
  return count;
}

template <typename Fn>
void hash_visit(VertexHashSet& set, Slice a, Slice b, Fn&& fn) {
  set.load(a);
  set.probe_visit(b, fn);
  set.clear();
}

}  // namespace intersect
}  // namespace tc
