// Copyright 2026 The ff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "ff/connectivity.hpp"
#include "test_support.hpp"

namespace ff {
namespace {

using testing::complete;
using testing::cycle;
using testing::dipole;
using testing::path;

int brute_edge_connectivity(const Multigraph& g) {
  const int n = g.num_vertices();
  int best = kUnbounded;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    int cross = 0;
    for (const Edge& e : g.edges()) {
      cross += ((mask >> e.u) & 1) != ((mask >> e.v) & 1) ? 1 : 0;
    }
    best = std::min(best, cross);
  }
  return best;
}

// All set partitions by recursive block assignment (independent of the
// library's restricted-growth iterator).
void each_partition(int n, std::vector<int>& label, int v, int blocks,
                    const std::function<void(const std::vector<int>&, int)>& f) {
  if (v == n) {
    f(label, blocks);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    label[v] = b;
    each_partition(n, label, v + 1, std::max(blocks, b + 1), f);
  }
}

int partition_formula(const Multigraph& g) {
  const int n = g.num_vertices();
  int best = kUnbounded;
  std::vector<int> label(n, 0);
  each_partition(n, label, 0, 0, [&](const std::vector<int>& lab, int blocks) {
    if (blocks < 2) return;
    int cross = 0;
    for (const Edge& e : g.edges()) cross += lab[e.u] != lab[e.v] ? 1 : 0;
    best = std::min(best, cross / (blocks - 1));
  });
  return best;
}

long long bell(int n) {
  std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(n + 1));
  t[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    t[i][0] = t[i - 1][i - 1];
    for (int j = 1; j <= i; ++j) t[i][j] = t[i][j - 1] + t[i - 1][j - 1];
  }
  return t[n][0];
}

TEST_CASE("edge connectivity examples") {
  CHECK(edge_connectivity(complete(5)) == 4);
  CHECK(edge_connectivity(cycle(4)) == 2);
  CHECK(edge_connectivity(dipole(3)) == 3);
  CHECK(edge_connectivity(Multigraph(1, {{0, 0}})) == kUnbounded);
  CHECK(edge_connectivity(Multigraph(3, {{0, 1}})) == 0);
}

TEST_CASE("edge connectivity agrees with subset enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Multigraph g =
        testing::random_multigraph(rng, n, static_cast<int>(rng() % 20), true);
    CHECK(edge_connectivity(g) == brute_edge_connectivity(g));
  }
}

TEST_CASE("tree packing examples") {
  const Multigraph k4 = complete(4);
  auto two = tree_packing(k4, 2);
  REQUIRE(two);
  CHECK(is_tree_packing(k4, *two, 2));
  CHECK_FALSE(tree_packing(k4, 3));
  const Multigraph p = path(5);
  auto one = tree_packing(p, 1);
  REQUIRE(one);
  CHECK(one->trees[0] == EdgeSubset::all(4));
}

TEST_CASE("max packing examples") {
  CHECK(max_packing(complete(6)) == 3);
  CHECK(max_packing(dipole(4)) == 4);
  CHECK(max_packing(path(3)) == 1);
  CHECK(max_packing(Multigraph(3, {{0, 1}})) == 0);
  CHECK(max_packing(Multigraph(1, {})) == kUnbounded);
}

TEST_CASE("max packing equals the partition formula") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Multigraph g = testing::random_multigraph(
        rng, n, static_cast<int>(rng() % 22), rng() % 4 == 0);
    const int m = max_packing(g);
    CHECK(m == partition_formula(g));
    auto p = tree_packing(g, m);
    REQUIRE(p);
    CHECK(is_tree_packing(g, *p, m));
  }
}

TEST_CASE("2m-edge-connected graphs pack m trees") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Multigraph g = testing::random_connected(rng, n, rng() % 18);
    const int lambda = edge_connectivity(g);
    const int m = lambda / 2;
    if (m == 0) continue;
    CHECK(tree_packing(g, m).has_value());
  }
}

TEST_CASE("partition iterator visits every partition once") {
  for (int n = 0; n <= 7; ++n) {
    long long count = 0;
    std::set<std::vector<int>> seen;
    for_each_partition(n, [&](const VertexPartition& p) {
      ++count;
      seen.insert(p.block_of);
      return true;
    });
    CHECK(count == bell(n));
    CHECK(static_cast<long long>(seen.size()) == count);
  }
}

TEST_CASE("partition connectivity examples") {
  CHECK_FALSE(partition_connectivity_check(dipole(3), 1, {1, 1}));
  const Multigraph tree = path(4);
  auto w = partition_connectivity_check(tree, 2, {0, 0, 0, 0});
  REQUIRE(w);
  CHECK(w->partition.num_blocks == 4);
  CHECK(w->observed == 3);
  CHECK(w->required == 6);
  CHECK_FALSE(partition_connectivity_check(cycle(5), 1, VertexMap(5, 0)));
  CHECK_THROWS_AS(
      partition_connectivity_check(complete(13), 1, VertexMap(13, 0)), Error);
}

TEST_CASE("loops count only at singleton blocks") {
  // One loop at vertex 0 and one edge: the loop satisfies l(0)=1 only while
  // 0 is a singleton.
  const Multigraph g(2, {{0, 0}, {0, 1}});
  VertexPartition whole{{0, 0}, 1};
  VertexPartition split{{0, 1}, 2};
  CHECK(partition_crossing(g, whole) == 0);
  CHECK(partition_crossing(g, split) == 2);
}

TEST_CASE("partition witnesses genuinely violate the inequality") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Multigraph g = testing::random_multigraph(rng, n, rng() % 14, true);
    const int m = static_cast<int>(rng() % 3);
    VertexMap l(n);
    for (int& x : l) x = static_cast<int>(rng() % 3);
    auto w = partition_connectivity_check(g, m, l);
    if (!w) continue;
    CHECK(partition_crossing(g, w->partition) == w->observed);
    CHECK(partition_requirement(w->partition, m, l) == w->required);
    CHECK(w->observed < w->required);
  }
}

// Checks H is m-tree-connected, contains M, and the rest meets the demand.
void check_split(const Multigraph& g, int m, const VertexMap& l,
                 const EdgeSubset& forced, const PartitionSplit& s) {
  CHECK(is_tree_packing(g, s.trees, m));
  CHECK(s.trees.union_edges(g.num_edges()) == s.h);
  CHECK(forced.is_subset_of(s.h));
  const std::vector<int> out = s.orientation.out_degrees(s.h.complement());
  for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(out[v] >= l[v]);
}

TEST_CASE("decompose partition-connected examples") {
  {
    const Multigraph d4 = dipole(4);
    const PartitionSplit s =
        decompose_partition_connected(d4, 1, {1, 1}, EdgeSubset(4));
    CHECK(s.h.size() == 1);
    check_split(d4, 1, {1, 1}, EdgeSubset(4), s);
  }
  {
    const Multigraph c5 = cycle(5);
    const PartitionSplit s =
        decompose_partition_connected(c5, 1, VertexMap(5, 0), EdgeSubset(5));
    CHECK(s.h.size() == 4);
  }
  {
    const Multigraph d3 = dipole(3);
    const EdgeSubset forced(3, {1});
    const PartitionSplit s = decompose_partition_connected(d3, 1, {1, 1}, forced);
    CHECK(s.h == forced);
    CHECK(s.orientation.forward(0) != s.orientation.forward(2));
  }
  CHECK_THROWS_AS(
      decompose_partition_connected(dipole(2), 1, {1, 1}, EdgeSubset(2)), Error);
  CHECK_THROWS_AS(decompose_partition_connected(path(3), 1, {0, 0, 0},
                                                EdgeSubset(2, {0, 1})),
                  Error);
}

TEST_CASE("decomposition exists exactly when the partition test passes") {
  std::mt19937_64 rng(31);
  int both = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Multigraph g = testing::random_connected(rng, n, rng() % 12);
    const int m = 1 + static_cast<int>(rng() % 2);
    VertexMap l(n);
    for (int& x : l) x = static_cast<int>(rng() % 3);
    const bool ok = !partition_connectivity_check(g, m, l).has_value();
    try {
      const PartitionSplit s =
          decompose_partition_connected(g, m, l, EdgeSubset(g.num_edges()));
      CHECK(ok);
      check_split(g, m, l, EdgeSubset(g.num_edges()), s);
      ++both;
    } catch (const Error& e) {
      CHECK_FALSE(ok);
      CHECK(e.kind() == ErrorKind::kPreconditionUnmet);
    }
  }
  CHECK(both > 20);
}

TEST_CASE("forced edges of maximum degree m end up in H") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Multigraph g = testing::random_connected(rng, n, 4 + rng() % 12);
    const int m = 1 + static_cast<int>(rng() % 2);
    VertexMap l(n);
    for (int& x : l) x = static_cast<int>(rng() % 2);
    if (partition_connectivity_check(g, m, l)) continue;
    // Greedy forced set with maximum degree at most m.
    EdgeSubset forced(g.num_edges());
    std::vector<int> deg(n, 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop() || rng() % 2) continue;
      if (deg[ed.u] < m && deg[ed.v] < m) {
        forced.insert(e);
        ++deg[ed.u];
        ++deg[ed.v];
      }
    }
    const PartitionSplit s = decompose_partition_connected(g, m, l, forced);
    check_split(g, m, l, forced, s);
  }
}

}  // namespace
}  // namespace ff
