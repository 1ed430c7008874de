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

#include "ff/connectivity.hpp"
#include "ff/factor.hpp"
#include "test_support.hpp"

namespace ff {
namespace {

using testing::complete;
using testing::cycle;
using testing::dipole;

// Plain enumeration of all 2^|E| factors; the reference for every solver.
bool exists_brute(const Multigraph& g,
                  const std::function<bool(const EdgeSubset&, const std::vector<int>&)>& ok) {
  const int m = g.num_edges();
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    const EdgeSubset h = testing::subset_from_mask(m, mask);
    if (ok(h, degrees_in(g, h))) return true;
  }
  return false;
}

bool gf_brute(const Multigraph& g, const VertexMap& lo, const VertexMap& hi,
              const EdgeSubset& inc, const EdgeSubset& exc) {
  return exists_brute(g, [&](const EdgeSubset& h, const std::vector<int>& d) {
    if (!inc.is_subset_of(h) || !h.disjoint_from(exc)) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (d[v] < lo[v] || d[v] > hi[v]) return false;
    }
    return true;
  });
}

void check_gf(const Multigraph& g, const VertexMap& lo, const VertexMap& hi,
              const EdgeSubset& inc, const EdgeSubset& exc, const EdgeSubset& h) {
  CHECK(inc.is_subset_of(h));
  CHECK(h.disjoint_from(exc));
  const std::vector<int> d = degrees_in(g, h);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    CHECK(lo[v] <= d[v]);
    CHECK(d[v] <= hi[v]);
  }
}

struct Instance {
  Multigraph g;
  VertexMap lo;
  VertexMap hi;
  EdgeSubset inc;
  EdgeSubset exc;
};

// Loopless multigraph with random bounds; at most one vertex has g = f.
Instance random_instance(std::mt19937_64& rng, bool loops = false) {
  const int n = 1 + static_cast<int>(rng() % 6);
  Instance x{testing::random_multigraph(rng, n, rng() % 13, loops), {}, {}, {}, {}};
  x.lo.resize(n);
  x.hi.resize(n);
  const int equal_at = rng() % 2 ? static_cast<int>(rng() % n) : -1;
  for (Vertex v = 0; v < n; ++v) {
    const int d = x.g.degree(v);
    x.lo[v] = static_cast<int>(rng() % (d + 2)) - 1;
    x.hi[v] = x.lo[v] + (v == equal_at ? 0 : 1 + static_cast<int>(rng() % 3));
  }
  x.inc = EdgeSubset(x.g.num_edges());
  x.exc = EdgeSubset(x.g.num_edges());
  for (EdgeId e = 0; e < x.g.num_edges(); ++e) {
    const auto roll = rng() % 6;
    if (roll == 0) x.inc.insert(e);
    if (roll == 1) x.exc.insert(e);
  }
  return x;
}

TEST_CASE("lovasz check examples") {
  const Multigraph k2 = complete(2);
  auto w = lovasz_check(k2, {2, 2}, {3, 3}, EdgeSubset(1), EdgeSubset(1));
  REQUIRE(w);
  CHECK(w->a.empty());
  CHECK(w->b == std::vector<Vertex>{0, 1});
  CHECK(w->value() == -2);
  CHECK_FALSE(lovasz_check(cycle(4), VertexMap(4, 1), VertexMap(4, 2),
                           EdgeSubset(4), EdgeSubset(4)));
  const Multigraph k4 = complete(4, 2);
  CHECK_FALSE(lovasz_check(k4, VertexMap(4, 0), k4.degrees(), EdgeSubset(12),
                           EdgeSubset(12)));
  CHECK_THROWS_AS(lovasz_check(cycle(4), VertexMap(4, 1), VertexMap(4, 1),
                               EdgeSubset(4), EdgeSubset(4)),
                  Error);
}

TEST_CASE("gf factor examples") {
  const Multigraph c4 = cycle(4);
  auto h = gf_factor(c4, VertexMap(4, 1), VertexMap(4, 2), EdgeSubset(4), EdgeSubset(4));
  REQUIRE(h);
  check_gf(c4, VertexMap(4, 1), VertexMap(4, 2), EdgeSubset(4), EdgeSubset(4), *h);
  auto only = gf_factor(c4, VertexMap(4, 0), VertexMap(4, 1), EdgeSubset(4, {0}),
                        EdgeSubset(4));
  REQUIRE(only);
  CHECK(*only == EdgeSubset(4, {0}));
  CHECK_FALSE(gf_factor(complete(2), {2, 2}, {3, 3}, EdgeSubset(1), EdgeSubset(1)));
  CHECK_THROWS_AS(gf_factor(c4, VertexMap(4, 0), VertexMap(4, 1), EdgeSubset(4, {0}),
                            EdgeSubset(4, {0})),
                  Error);
}

TEST_CASE("gf factor agrees with enumeration, with and without pruning") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 400; ++trial) {
    const Instance x = random_instance(rng, trial % 2 == 0);
    const bool expected = gf_brute(x.g, x.lo, x.hi, x.inc, x.exc);
    for (bool pruning : {true, false}) {
      SolverOptions options;
      options.lovasz_pruning = pruning;
      auto h = gf_factor(x.g, x.lo, x.hi, x.inc, x.exc, options);
      CHECK(h.has_value() == expected);
      if (h) check_gf(x.g, x.lo, x.hi, x.inc, x.exc, *h);
    }
  }
}

TEST_CASE("lovasz duality on loopless multigraphs") {
  std::mt19937_64 rng(67);
  int refuted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Instance x = random_instance(rng);
    SolverOptions options;
    options.lovasz_pruning = false;
    const bool has = gf_factor(x.g, x.lo, x.hi, x.inc, x.exc, options).has_value();
    auto w = lovasz_check(x.g, x.lo, x.hi, x.inc, x.exc);
    CHECK(has == !w.has_value());
    if (w) {
      ++refuted;
      const LovaszWitness again =
          lovasz_evaluate(x.g, x.lo, x.hi, x.inc, x.exc, w->a, w->b);
      CHECK(again.lhs == w->lhs);
      CHECK(again.rhs == w->rhs);
      CHECK(again.lhs > again.rhs);
    }
  }
  CHECK(refuted > 30);
}

TEST_CASE("a loop breaks the single-equality case") {
  // One vertex with one loop, g = f = 1: no factor, yet no pair refutes.
  const Multigraph g(1, {{0, 0}});
  CHECK_FALSE(gf_factor(g, {1}, {1}, EdgeSubset(1), EdgeSubset(1)));
  CHECK_FALSE(lovasz_check(g, {1}, {1}, EdgeSubset(1), EdgeSubset(1)));
}

TEST_CASE("orientation gf examples") {
  const Multigraph d2 = dipole(2);
  const Orientation both(d2, {true, false});
  auto h = orientation_gf(d2, {1, 1}, {1, 1}, EdgeSubset(2), EdgeSubset(2), both);
  REQUIRE(h);
  CHECK(h->size() == 1);

  const Multigraph k4 = complete(4);
  auto full = orientation_gf(k4, VertexMap(4, 0), k4.degrees(), EdgeSubset(6),
                             EdgeSubset(6), Orientation(k4));
  CHECK(full.has_value());

  const Multigraph tri = cycle(3);
  const Orientation directed(tri);
  auto with_e0 = orientation_gf(tri, VertexMap(3, 1), VertexMap(3, 2),
                                EdgeSubset(3, {0}), EdgeSubset(3), directed);
  REQUIRE(with_e0);
  CHECK(with_e0->contains(0));

  CHECK_THROWS_AS(orientation_gf(d2, {2, 1}, {2, 2}, EdgeSubset(2), EdgeSubset(2),
                                 both),
                  Error);
}

TEST_CASE("orientation condition guarantees a factor") {
  std::mt19937_64 rng(71);
  int applied = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Multigraph g = testing::random_multigraph(rng, n, rng() % 12, false);
    std::vector<bool> fwd(g.num_edges());
    for (size_t i = 0; i < fwd.size(); ++i) fwd[i] = rng() & 1;
    const Orientation o(g, fwd);
    EdgeSubset inc(g.num_edges());
    EdgeSubset exc(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto roll = rng() % 5;
      if (roll == 0) inc.insert(e);
      if (roll == 1) exc.insert(e);
    }
    // Tightest bounds the condition allows, loosened at random.
    VertexMap lo(n);
    VertexMap hi(n);
    const auto in_f = o.in_degrees(inc);
    const auto out_f = o.out_degrees(inc);
    const auto in_f0 = o.in_degrees(exc);
    const auto out_f0 = o.out_degrees(exc);
    const int equal_at = rng() % 2 ? static_cast<int>(rng() % n) : -1;
    bool usable = true;
    for (Vertex v = 0; v < n; ++v) {
      lo[v] = o.out_degree(v) + in_f[v] - out_f0[v] - static_cast<int>(rng() % 2);
      hi[v] = o.in_degree(v) + out_f[v] - in_f0[v] + static_cast<int>(rng() % 2);
      if (lo[v] > hi[v]) usable = false;
      if (lo[v] == hi[v] && v != equal_at) ++hi[v];
    }
    if (!usable) continue;
    int equal = 0;
    for (Vertex v = 0; v < n; ++v) equal += lo[v] == hi[v] ? 1 : 0;
    if (equal > 1) continue;
    ++applied;
    auto h = orientation_gf(g, lo, hi, inc, exc, o);
    REQUIRE(h);
    check_gf(g, lo, hi, inc, exc, *h);
  }
  CHECK(applied > 100);
}

TEST_CASE("directed list factor examples") {
  const Multigraph tri = cycle(3);
  auto h = directed_list_factor(tri, Orientation(tri), ListFamily(3, {1, 2}));
  REQUIRE(h);
  for (int d : degrees_in(tri, *h)) CHECK((d == 1 || d == 2));
  const Multigraph edge = complete(2);
  CHECK(directed_list_factor(edge, Orientation(edge), ListFamily(2, {0, 1})));
  const Multigraph lone(1, {});
  CHECK_THROWS_AS(directed_list_factor(lone, Orientation(lone), ListFamily{{5}}),
                  Error);
  CHECK_FALSE(directed_list_factor(lone, Orientation(lone), ListFamily{{}}));
}

ListFamily random_lists(std::mt19937_64& rng, const Multigraph& g,
                        const VertexMap& lo, const VertexMap& hi, int extra) {
  ListFamily lists(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (int d = lo[v]; d <= hi[v]; ++d) {
      if (static_cast<int>(rng() % 4) < 2 + extra) lists[v].push_back(d);
    }
  }
  return lists;
}

TEST_CASE("list factors agree with enumeration and honour the size theorem") {
  std::mt19937_64 rng(73);
  int guaranteed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Multigraph g = testing::random_multigraph(rng, n, rng() % 11, trial % 3 == 0);
    std::vector<bool> fwd(g.num_edges());
    for (size_t i = 0; i < fwd.size(); ++i) fwd[i] = rng() & 1;
    const Orientation o(g, fwd);
    const ListFamily lists =
        random_lists(rng, g, VertexMap(n, 0), g.degrees(), static_cast<int>(rng() % 3));
    auto h = directed_list_factor(g, o, lists);
    const bool expected = exists_brute(g, [&](const EdgeSubset&, const std::vector<int>& d) {
      for (Vertex v = 0; v < n; ++v) {
        if (std::find(lists[v].begin(), lists[v].end(), d[v]) == lists[v].end()) return false;
      }
      return true;
    });
    CHECK(h.has_value() == expected);
    if (list_sizes_cover_out_degree(g, o, lists)) {
      ++guaranteed;
      CHECK(h.has_value());
    }
  }
  CHECK(guaranteed > 20);
}

TEST_CASE("list factor with include and exclude sets") {
  const Multigraph tri = cycle(3);
  auto h = list_factor_incl_excl(tri, Orientation(tri), ListFamily(3, {1, 2}),
                                 EdgeSubset(3, {0}), EdgeSubset(3), VertexMap(3, 0),
                                 VertexMap(3, 0));
  REQUIRE(h);
  CHECK(h->contains(0));
  const Multigraph k4 = complete(4);
  ListFamily exact(4);
  for (Vertex v = 0; v < 4; ++v) exact[v] = {k4.degree(v)};
  auto all = list_factor_incl_excl(k4, Orientation(k4), exact, EdgeSubset::all(6),
                                   EdgeSubset(6), VertexMap(4, 0), VertexMap(4, 0));
  REQUIRE(all);
  CHECK(*all == EdgeSubset::all(6));
  const Multigraph edge = complete(2);
  auto none = list_factor_incl_excl(edge, Orientation(edge), ListFamily(2, {0}),
                                    EdgeSubset(1), EdgeSubset(1, {0}), {0, 0}, {0, 0});
  REQUIRE(none);
  CHECK(none->empty());
  CHECK_THROWS_AS(list_factor_incl_excl(edge, Orientation(edge), ListFamily(2, {1}),
                                        EdgeSubset(1), EdgeSubset(1, {0}), {0, 0},
                                        {1, 1}),
                  Error);
}

TEST_CASE("include-exclude list corollary guarantees a factor") {
  std::mt19937_64 rng(79);
  int guaranteed = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Multigraph g = testing::random_multigraph(rng, n, rng() % 10, trial % 3 == 0);
    std::vector<bool> fwd(g.num_edges());
    for (size_t i = 0; i < fwd.size(); ++i) fwd[i] = rng() & 1;
    const Orientation o(g, fwd);
    EdgeSubset inc(g.num_edges());
    EdgeSubset exc(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto roll = rng() % 4;
      if (roll == 0) inc.insert(e);
      if (roll == 1) exc.insert(e);
    }
    const auto d_f = degrees_in(g, inc);
    const auto d_f0 = degrees_in(g, exc);
    VertexMap s(n);
    VertexMap s0(n);
    VertexMap hi(n);
    for (Vertex v = 0; v < n; ++v) {
      s[v] = static_cast<int>(rng() % (d_f[v] + 1));
      s0[v] = static_cast<int>(rng() % (d_f0[v] + 1));
      hi[v] = g.degree(v) - s0[v];
    }
    const ListFamily lists = random_lists(rng, g, s, hi, 1 + static_cast<int>(rng() % 2));
    auto h = list_factor_incl_excl(g, o, lists, inc, exc, s, s0);
    const bool expected = exists_brute(g, [&](const EdgeSubset& x, const std::vector<int>& d) {
      if (!inc.is_subset_of(x) || !x.disjoint_from(exc)) return false;
      for (Vertex v = 0; v < n; ++v) {
        if (std::find(lists[v].begin(), lists[v].end(), d[v]) == lists[v].end()) return false;
      }
      return true;
    });
    CHECK(h.has_value() == expected);
    if (list_sizes_cover_incl_excl(g, o, lists, inc, exc, s, s0)) {
      ++guaranteed;
      CHECK(h.has_value());
    }
  }
  CHECK(guaranteed > 20);
}

TEST_CASE("modulo factor examples") {
  const Multigraph k4 = complete(4);
  auto h = modulo_factor_bounded(k4, ResidueTarget::constant(4, 2, 0), VertexMap(4, 1),
                                 VertexMap(4, 2), EdgeSubset(6), EdgeSubset(6));
  REQUIRE(h);
  CHECK(h->size() == 4);
  CHECK(is_connected(k4, *h));
  const Multigraph k33 = testing::complete_bipartite(3, 3);
  auto full = modulo_factor_bounded(k33, ResidueTarget::constant(6, 3, 0), VertexMap(6, 0),
                                    VertexMap(6, 3), EdgeSubset(9), EdgeSubset(9));
  REQUIRE(full);
  CHECK((full->size() == 9 || full->empty()));
  CHECK_FALSE(modulo_factor_bounded(complete(2), ResidueTarget::constant(2, 2, 1),
                                    {0, 0}, {0, 0}, EdgeSubset(1), EdgeSubset(1)));
}

TEST_CASE("modulo factor agrees with enumeration") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Multigraph g = testing::random_multigraph(rng, n, rng() % 13, trial % 2 == 0);
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<int> res(n);
    VertexMap lo(n);
    VertexMap hi(n);
    for (Vertex v = 0; v < n; ++v) {
      res[v] = static_cast<int>(rng() % k);
      lo[v] = static_cast<int>(rng() % (g.degree(v) + 1));
      hi[v] = lo[v] + static_cast<int>(rng() % (k + 2));
    }
    const ResidueTarget r(k, res);
    EdgeSubset inc(g.num_edges());
    EdgeSubset exc(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto roll = rng() % 8;
      if (roll == 0) inc.insert(e);
      if (roll == 1) exc.insert(e);
    }
    auto h = modulo_factor_bounded(g, r, lo, hi, inc, exc);
    const bool expected = exists_brute(g, [&](const EdgeSubset& x, const std::vector<int>& d) {
      if (!inc.is_subset_of(x) || !x.disjoint_from(exc)) return false;
      for (Vertex v = 0; v < n; ++v) {
        if (d[v] < lo[v] || d[v] > hi[v] || d[v] % k != res[v]) return false;
      }
      return true;
    });
    CHECK(h.has_value() == expected);
    if (h) {
      const auto d = degrees_in(g, *h);
      for (Vertex v = 0; v < n; ++v) CHECK(d[v] % k == res[v]);
    }
  }
}

TEST_CASE("exact factor handles structure clauses") {
  FactorContract eulerian;
  eulerian.residue = ResidueTarget::constant(5, 2, 0);
  eulerian.m = 1;
  const Multigraph k5 = complete(5);
  auto h = exact_factor(k5, eulerian);
  REQUIRE(h);
  CHECK(is_connected(k5, *h));
  FactorContract bip = eulerian;
  bip.bipartite = true;
  CHECK_FALSE(exact_factor(k5, bip));
  FactorContract bad;
  bad.lists[7] = {1};
  CHECK_THROWS_AS(exact_factor(k5, bad), Error);
}

}  // namespace
}  // namespace ff
