#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "tc/intersect.hpp"

using namespace tc;
using Ids = std::vector<VertexId>;

namespace {

Ids random_sorted(std::mt19937_64& rng, VertexId universe, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<VertexId> id(0, universe - 1);
  std::set<VertexId> s;
  const std::size_t k = len(rng);
  while (s.size() < std::min<std::size_t>(k, universe)) s.insert(id(rng));
  return {s.begin(), s.end()};
}

// Reference: std::set membership, independent of all kernels.
Ids reference(const Ids& a, const Ids& b) {
  std::set<VertexId> sa(a.begin(), a.end());
  Ids out;
  for (VertexId x : b)
    if (sa.count(x)) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("fixed examples agree across kernels") {
  VertexHashSet set(16);
  const Ids a{1, 3, 5}, b{3, 5, 7}, e{}, c{1, 2, 3};
  for (auto [x, y, want] : {std::tuple{a, b, 2}, {e, c, 0}, {c, e, 0}, {e, e, 0}}) {
    CHECK(intersect::merge(x, y) == std::uint64_t(want));
    CHECK(intersect::binary(x, y) == std::uint64_t(want));
    CHECK(intersect::partition(x, y) == std::uint64_t(want));
    CHECK(intersect::hash(set, x, y) == std::uint64_t(want));
    CHECK(set.empty());
  }
}

TEST_CASE("kernels agree with a set-based reference on random slices") {
  std::mt19937_64 rng(2024);
  VertexHashSet set(512);
  for (int trial = 0; trial < 2000; ++trial) {
    const VertexId universe = 1 + static_cast<VertexId>(rng() % 512);
    Ids a = random_sorted(rng, universe, trial % 7 == 0 ? 3 : 200);
    Ids b = random_sorted(rng, universe, 200);
    const Ids want = reference(a, b);
    CHECK(intersect::merge(a, b) == want.size());
    CHECK(intersect::binary(a, b) == want.size());
    CHECK(intersect::binary(b, a) == want.size());
    CHECK(intersect::partition(a, b) == want.size());
    CHECK(intersect::hash(set, a, b) == want.size());

    Ids visited;
    intersect::merge_visit(a, b, [&](VertexId w) { visited.push_back(w); });
    CHECK(visited == want);
    visited.clear();
    intersect::binary_visit(b, a, [&](VertexId w) { visited.push_back(w); });
    CHECK(visited == want);
    visited.clear();
    intersect::partition_visit(a, b, [&](VertexId w) { visited.push_back(w); });
    CHECK(visited == want);
    visited.clear();
    intersect::hash_visit(set, a, b, [&](VertexId w) { visited.push_back(w); });
    CHECK(visited == want);
  }
}

TEST_CASE("VertexHashSet") {
  VertexHashSet set(8);
  SUBCASE("load, probe, clear") {
    const Ids load{2, 4}, probe{1, 2, 3, 4};
    set.load(load);
    CHECK(set.probe_count(probe) == 2);
    set.clear();
    CHECK(set.empty());
    for (VertexId v = 0; v < 8; ++v) CHECK_FALSE(set.contains(v));
  }
  SUBCASE("empty load matches nothing") {
    set.load(Ids{});
    CHECK(set.probe_count(Ids{0, 1, 7}) == 0);
  }
  SUBCASE("loading a non-empty set is a contract violation") {
    set.load(Ids{1});
    CHECK_THROWS_AS(set.load(Ids{2}), ContractError);
    set.clear();
    CHECK_NOTHROW(set.load(Ids{2}));
  }
  SUBCASE("touched list tracks exactly the set ids") {
    set.load(Ids{5, 1, 6});
    set.insert(5);
    CHECK(set.size() == 3);
    Ids touched(set.touched().begin(), set.touched().end());
    CHECK(touched == Ids{5, 1, 6});
  }
}

TEST_CASE("reused hash set answers like a fresh one") {
  std::mt19937_64 rng(77);
  VertexHashSet reused(300);
  for (int trial = 0; trial < 500; ++trial) {
    Ids a = random_sorted(rng, 300, 80), b = random_sorted(rng, 300, 80);
    VertexHashSet fresh(300);
    CHECK(intersect::hash(reused, a, b) == intersect::hash(fresh, a, b));
    CHECK(reused.empty());
  }
  for (VertexId v = 0; v < 300; ++v) CHECK_FALSE(reused.contains(v));
}
