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

// Small graph builders and random instance generators shared by the tests.

#ifndef FF_TESTS_TEST_SUPPORT_HPP_
#define FF_TESTS_TEST_SUPPORT_HPP_

#include <random>
#include <vector>

#include "ff/graph.hpp"

namespace ff::testing {

inline Multigraph complete(int n, int times = 1) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int t = 0; t < times; ++t) edges.push_back({u, v});
    }
  }
  return Multigraph(n, edges);
}

inline Multigraph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, edges);
}

inline Multigraph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Multigraph(n, edges);
}

inline Multigraph dipole(int width) {
  return Multigraph(2, std::vector<Edge>(width, Edge{0, 1}));
}

inline Multigraph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Multigraph(leaves + 1, edges);
}

inline Multigraph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  }
  return Multigraph(a + b, edges);
}

/// Each edge replaced by `times` parallel copies, copies adjacent in id order.
inline Multigraph multiply(const Multigraph& g, int times) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (int t = 0; t < times; ++t) edges.push_back(e);
  }
  return Multigraph(g.num_vertices(), edges);
}

/// Uniform multigraph: m edges with independently chosen endpoints.
inline Multigraph random_multigraph(std::mt19937_64& rng, int n, int m,
                                    bool loops) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<Edge> edges;
  if (n < 2 && !loops) m = 0;
  while (static_cast<int>(edges.size()) < m) {
    Edge e{pick(rng), pick(rng)};
    if (e.is_loop() && !loops) continue;
    edges.push_back(e);
  }
  return Multigraph(n, edges);
}

/// Random spanning tree plus extra random edges: always connected.
inline Multigraph random_connected(std::mt19937_64& rng, int n, int extra,
                                   bool loops = false) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.push_back({parent(rng), v});
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  if (n < 2 && !loops) extra = 0;
  while (static_cast<int>(edges.size()) < n - 1 + extra) {
    Edge e{pick(rng), pick(rng)};
    if (e.is_loop() && !loops) continue;
    edges.push_back(e);
  }
  return Multigraph(n, edges);
}

/// All subsets of the edge set as masks, for exhaustive oracles.
inline EdgeSubset subset_from_mask(int num_edges, unsigned long long mask) {
  EdgeSubset s(num_edges);
  for (int e = 0; e < num_edges; ++e) {
    if (mask >> e & 1ULL) s.insert(e);
  }
  return s;
}

}  // namespace ff::testing

#endif  // FF_TESTS_TEST_SUPPORT_HPP_
