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

#include "ff/orientation.hpp"
#include "test_support.hpp"

namespace ff {
namespace {

using testing::complete;
using testing::cycle;
using testing::dipole;

// Exhaustive: does some orientation give in-degree >= l everywhere?
bool demand_feasible_brute(const Multigraph& g, const VertexMap& l) {
  const int m = g.num_edges();
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    std::vector<bool> fwd(m);
    for (int e = 0; e < m; ++e) fwd[e] = (mask >> e) & 1;
    const Orientation o(g, fwd);
    bool ok = true;
    for (Vertex v = 0; v < g.num_vertices() && ok; ++v) ok = o.in_degree(v) >= l[v];
    if (ok) return true;
  }
  return false;
}

Multigraph random_edge_connected(std::mt19937_64& rng, int lambda) {
  while (true) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Multigraph g =
        testing::random_connected(rng, n, 2 * lambda + rng() % 10, rng() % 4 == 0);
    if (edge_connectivity(g) >= lambda) return g;
  }
}

TEST_CASE("eulerian orientation examples") {
  const Orientation c4 = eulerian_orientation(cycle(4));
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(c4.out_degree(v) == 1);
    CHECK(c4.in_degree(v) == 1);
  }
  const Orientation d2 = eulerian_orientation(dipole(2));
  CHECK(d2.forward(0) != d2.forward(1));
  const Orientation loop = eulerian_orientation(Multigraph(1, {{0, 0}}));
  CHECK(loop.out_degree(0) == 1);
  CHECK(loop.in_degree(0) == 1);
  CHECK_THROWS_AS(eulerian_orientation(testing::path(3)), Error);
}

TEST_CASE("eulerian orientation balances random even graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Multigraph g = testing::random_multigraph(rng, n, rng() % 16, true);
    // Pair up odd vertices to make every degree even.
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<Vertex> odd;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) % 2) odd.push_back(v);
    }
    for (size_t i = 0; i + 1 < odd.size(); i += 2) edges.push_back({odd[i], odd[i + 1]});
    g = Multigraph(n, edges);
    const Orientation o = eulerian_orientation(g);
    for (Vertex v = 0; v < n; ++v) CHECK(o.out_degree(v) == o.in_degree(v));
  }
}

TEST_CASE("demand orientation examples") {
  const Orientation d2 = demand_orientation(dipole(2), {1, 1});
  CHECK(d2.in_degree(0) == 1);
  CHECK(d2.in_degree(1) == 1);
  const Orientation any = demand_orientation(complete(4), VertexMap(4, 0));
  CHECK(any.num_edges() == 6);
  const Orientation star = demand_orientation(testing::star(3), {3, 0, 0, 0});
  CHECK(star.in_degree(0) == 3);
  try {
    demand_orientation(dipole(2), {2, 1});
    FAIL("expected infeasible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPreconditionUnmet);
  }
}

TEST_CASE("demand orientation is exact with a genuine witness") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Multigraph g = testing::random_multigraph(rng, n, rng() % 11, true);
    VertexMap l(n);
    for (int& x : l) x = static_cast<int>(rng() % 4);
    const bool feasible = demand_feasible_brute(g, l);
    try {
      const Orientation o = demand_orientation(g, l);
      CHECK(feasible);
      for (Vertex v = 0; v < n; ++v) CHECK(o.in_degree(v) >= l[v]);
    } catch (const Error& e) {
      CHECK_FALSE(feasible);
      const std::vector<bool> a = vertex_mask(n, e.witness());
      int touching = 0;
      int need = 0;
      for (const Edge& ed : g.edges()) touching += (a[ed.u] || a[ed.v]) ? 1 : 0;
      for (Vertex v : e.witness()) need += l[v];
      CHECK(need > touching);
    }
  }
}

void check_basic(const Multigraph& g, int m, const EdgeSubset& forced,
                 const EdgeSubset& excluded, std::optional<Vertex> z,
                 const BasicDecomposition& b) {
  CHECK(is_tree_packing(g, b.trees, m));
  CHECK(forced.is_subset_of(b.h));
  CHECK(b.h.disjoint_from(excluded));
  const EdgeSubset rest = (b.h | excluded).complement();
  const std::vector<int> out = b.orientation.out_degrees(rest);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int half = (z && *z == v) ? half_ceil(g.degree(v)) : half_floor(g.degree(v));
    CHECK(b.demand[v] == std::max(0, half - m));
    CHECK(out[v] >= b.demand[v]);
  }
  // The leftover factor passes the partition test on its own.
  const SpanningSubgraph sub = spanning_subgraph(g, rest);
  if (g.num_vertices() <= 10) {
    CHECK_FALSE(partition_connectivity_check(sub.graph, 0, b.demand));
  }
}

TEST_CASE("basic decomposition examples") {
  const Multigraph d4 = dipole(4);
  const BasicDecomposition plain =
      basic_decomposition(d4, 1, EdgeSubset(4), EdgeSubset(4));
  CHECK(plain.h.size() == 1);
  CHECK(plain.demand == VertexMap{1, 1});
  check_basic(d4, 1, EdgeSubset(4), EdgeSubset(4), std::nullopt, plain);

  const EdgeSubset m_set(4, {0});
  const EdgeSubset m0_set(4, {1});
  const BasicDecomposition with_sets = basic_decomposition(d4, 1, m_set, m0_set);
  CHECK(with_sets.h.contains(0));
  CHECK_FALSE(with_sets.h.contains(1));
  check_basic(d4, 1, m_set, m0_set, std::nullopt, with_sets);

  const BasicDecomposition c4 =
      basic_decomposition(cycle(4), 1, EdgeSubset(4), EdgeSubset(4), 0);
  CHECK(c4.h.size() == 3);
  CHECK(c4.demand[0] == 0);

  CHECK_THROWS_AS(basic_decomposition(cycle(4), 2, EdgeSubset(4), EdgeSubset(4)),
                  Error);
  CHECK_THROWS_AS(
      basic_decomposition(d4, 1, EdgeSubset(4, {0}), EdgeSubset(4, {0})), Error);
  CHECK_THROWS_AS(
      basic_decomposition(d4, 1, EdgeSubset(4), EdgeSubset(4, {0, 1})), Error);
}

TEST_CASE("basic decomposition on random edge-connected graphs") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 2);
    const Multigraph g = random_edge_connected(rng, 2 * m);
    const int n = g.num_vertices();
    EdgeSubset forced(g.num_edges());
    EdgeSubset excluded(g.num_edges());
    std::vector<int> deg(n, 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop()) continue;
      const auto roll = rng() % 4;
      if (roll == 0 && deg[ed.u] < m && deg[ed.v] < m) {
        forced.insert(e);
        ++deg[ed.u];
        ++deg[ed.v];
      } else if (roll == 1 && excluded.size() < m) {
        excluded.insert(e);
      }
    }
    std::optional<Vertex> z;
    if (rng() & 1) z = static_cast<Vertex>(rng() % n);
    const BasicDecomposition b = basic_decomposition(g, m, forced, excluded, z);
    check_basic(g, m, forced, excluded, z, b);
  }
}

void check_extension(const Multigraph& g, int m, const EdgeSubset& forced,
                     std::span<const DirectedEdge> pre, const VertexMap& r,
                     std::optional<Vertex> z, const PreorientationExtension& x) {
  CHECK(is_tree_packing(g, x.trees, m));
  CHECK(forced.is_subset_of(x.f));
  for (const DirectedEdge& d : pre) {
    CHECK_FALSE(x.f.contains(d.edge));
    CHECK(x.orientation.forward(d.edge) == d.forward);
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int in_m0 = 0;
    for (const DirectedEdge& d : pre) in_m0 += x.orientation.head(d.edge) == v ? 1 : 0;
    CHECK(x.orientation.in_degree(v, x.f) == m - r[v] - in_m0);
    CHECK(x.orientation.out_degree(v) <= half_ceil(g.degree(v)));
    CHECK(x.orientation.in_degree(v) >= half_floor(g.degree(v)));
    if (z && *z == v) {
      CHECK(x.orientation.out_degree(v) <= half_floor(g.degree(v)));
      CHECK(x.orientation.in_degree(v) >= half_ceil(g.degree(v)));
    }
  }
}

TEST_CASE("extend preorientation examples") {
  const Multigraph d4 = dipole(4);
  const std::vector<DirectedEdge> pre{{0, true}};
  const PreorientationExtension x =
      extend_preorientation(d4, 1, EdgeSubset(4), pre, {0, 0});
  REQUIRE(x.f.size() == 1);
  const EdgeId f_edge = x.f.ids()[0];
  CHECK(x.orientation.tail(f_edge) == 1);
  CHECK(x.orientation.out_degree(0) == 2);
  CHECK(x.orientation.out_degree(1) == 2);
  check_extension(d4, 1, EdgeSubset(4), pre, {0, 0}, std::nullopt, x);

  const Multigraph k5 = complete(5);
  const VertexMap r{1, 0, 0, 0, 0};
  const PreorientationExtension y =
      extend_preorientation(k5, 1, EdgeSubset(10), {}, r, 0);
  CHECK(y.orientation.in_degree(0, y.f) == 0);
  for (EdgeId e : y.f.ids()) {
    if (k5.edge(e).u == 0 || k5.edge(e).v == 0) CHECK(y.orientation.tail(e) == 0);
  }
  check_extension(k5, 1, EdgeSubset(10), {}, r, 0, y);

  CHECK_THROWS_AS(extend_preorientation(d4, 1, EdgeSubset(4), pre, {1, 0}),
                  Error);
}

TEST_CASE("extend preorientation on random edge-connected graphs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 2);
    const Multigraph g = random_edge_connected(rng, 2 * m);
    const int n = g.num_vertices();
    std::vector<DirectedEdge> pre;
    const int m0_size = static_cast<int>(rng() % (m + 1));
    for (EdgeId e = 0; e < g.num_edges() && static_cast<int>(pre.size()) < m0_size; ++e) {
      if (!g.edge(e).is_loop() && rng() % 3 == 0) pre.push_back({e, (rng() & 1) != 0});
    }
    VertexMap r(n, 0);
    for (int i = 0; i < m - static_cast<int>(pre.size()); ++i) ++r[rng() % n];
    std::optional<Vertex> z;
    if (rng() & 1) z = static_cast<Vertex>(rng() % n);
    const PreorientationExtension x =
        extend_preorientation(g, m, EdgeSubset(g.num_edges()), pre, r, z);
    check_extension(g, m, EdgeSubset(g.num_edges()), pre, r, z, x);
  }
}

}  // namespace
}  // namespace ff
