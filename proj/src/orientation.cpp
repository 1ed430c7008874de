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

#include "ff/orientation.hpp"

#include <numeric>
#include <string>

#include "ff/error.hpp"
#include "flow.hpp"

namespace ff {

Orientation eulerian_orientation(const Multigraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) % 2 != 0) {
      fail(ErrorKind::kPreconditionUnmet,
           "vertex " + std::to_string(v) + " has odd degree", {v});
    }
  }
  Orientation o(g);
  std::vector<bool> used(g.num_edges(), false);
  std::vector<size_t> next(g.num_vertices(), 0);
  // Closed trails: with every degree even a walk can only get stuck at its
  // start, so each trail is balanced.
  for (Vertex start = 0; start < g.num_vertices(); ++start) {
    while (true) {
      Vertex cur = start;
      bool moved = false;
      while (true) {
        auto inc = g.incident(cur);
        while (next[cur] < inc.size() && used[inc[next[cur]]]) ++next[cur];
        if (next[cur] == inc.size()) break;
        const EdgeId e = inc[next[cur]];
        used[e] = true;
        o.set_tail(e, cur);
        cur = g.edge(e).other(cur);
        moved = true;
      }
      if (!moved) break;
    }
  }
  return o;
}

Orientation demand_orientation(const Multigraph& g, const VertexMap& l) {
  const int n = g.num_vertices();
  if (static_cast<int>(l.size()) != n) {
    fail(ErrorKind::kInvalidInput, "demand map size differs from vertex count");
  }
  // Loops give their vertex one in-arc whatever happens.
  VertexMap need(n);
  for (Vertex v = 0; v < n; ++v) need[v] = l[v];
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) --need[e.u];
  }
  const int num_edges = g.num_edges();
  const int source = 0;
  const int sink = 1;
  const int first_edge = 2;
  const int first_vertex = first_edge + num_edges;
  detail::FlowNetwork net(first_vertex + n);
  const int big = num_edges + 1;
  std::vector<std::pair<int, int>> to_end(num_edges, {-1, -1});
  for (EdgeId e = 0; e < num_edges; ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    net.add_arc(source, first_edge + e, 1);
    to_end[e] = {net.add_arc(first_edge + e, first_vertex + ed.u, big),
                 net.add_arc(first_edge + e, first_vertex + ed.v, big)};
  }
  long long total = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (need[v] > 0) {
      net.add_arc(first_vertex + v, sink, need[v]);
      total += need[v];
    }
  }
  if (net.max_flow(source, sink) < total) {
    const std::vector<bool> reach = net.residual_reachable(source);
    std::vector<int> deficient;
    for (Vertex v = 0; v < n; ++v) {
      if (!reach[first_vertex + v] && need[v] > 0) deficient.push_back(v);
    }
    fail(ErrorKind::kPreconditionUnmet,
         "in-degree demand exceeds the edges touching a vertex set",
         deficient);
  }
  Orientation o(g);
  for (EdgeId e = 0; e < num_edges; ++e) {
    if (to_end[e].first < 0) continue;
    // Flow to an endpoint makes it the head.
    if (net.flow(to_end[e].first) > 0) {
      o.set_tail(e, g.edge(e).v);
    } else if (net.flow(to_end[e].second) > 0) {
      o.set_tail(e, g.edge(e).u);
    }
  }
  return o;
}

namespace {

void check_loopless(const Multigraph& g, const EdgeSubset& s, const char* name) {
  for (EdgeId e : s.ids()) {
    if (g.edge(e).is_loop()) {
      fail(ErrorKind::kPreconditionUnmet,
           std::string(name) + " contains loop " + std::to_string(e));
    }
  }
}

}  // namespace

BasicDecomposition basic_decomposition(const Multigraph& g, int m,
                                       const EdgeSubset& forced,
                                       const EdgeSubset& excluded,
                                       std::optional<Vertex> z) {
  const int n = g.num_vertices();
  if (m < 0) fail(ErrorKind::kInvalidInput, "negative tree count");
  if (forced.universe() != g.num_edges() ||
      excluded.universe() != g.num_edges()) {
    fail(ErrorKind::kInvalidInput, "edge subset belongs to another graph");
  }
  if (z && !g.valid_vertex(*z)) {
    fail(ErrorKind::kInvalidInput, "vertex z out of range");
  }
  const int lambda = edge_connectivity(g);
  if (lambda < 2 * m) {
    fail(ErrorKind::kPreconditionUnmet,
         "graph is " + std::to_string(lambda) + "-edge-connected, needs " +
             std::to_string(2 * m));
  }
  check_loopless(g, forced, "M");
  check_loopless(g, excluded, "M0");
  if (!forced.disjoint_from(excluded)) {
    fail(ErrorKind::kPreconditionUnmet, "M and M0 share an edge");
  }
  const std::vector<int> forced_degree = degrees_in(g, forced);
  for (Vertex v = 0; v < n; ++v) {
    if (forced_degree[v] > m) {
      fail(ErrorKind::kPreconditionUnmet,
           "Delta(M) exceeds " + std::to_string(m) + " at vertex " +
               std::to_string(v),
           {v});
    }
  }
  if (excluded.size() > m) {
    fail(ErrorKind::kPreconditionUnmet,
         "M0 has " + std::to_string(excluded.size()) + " edges, at most " +
             std::to_string(m) + " allowed");
  }
  VertexMap l(n);
  for (Vertex v = 0; v < n; ++v) {
    const int half = (z && *z == v) ? half_ceil(g.degree(v)) : half_floor(g.degree(v));
    l[v] = std::max(0, half - m);
  }
  auto split = split_trees_and_demand(g, excluded.complement(), m, 0, l, forced);
  if (!split) {
    fail(ErrorKind::kContractViolation,
         "no tree-connected factor with the degree-half demand on the rest");
  }
  return BasicDecomposition{split->h, split->trees, l, split->orientation};
}

namespace {

// Picks, for each vertex v, r(v) distinct loopless edges outside `blocked`
// to point into v. Lowest ids first, backtracking on conflicts.
bool pick_in_edges(const Multigraph& g, const EdgeSubset& blocked,
                   const std::vector<Vertex>& slots, size_t i, EdgeId min_id,
                   std::vector<bool>& taken,
                   std::vector<std::pair<EdgeId, Vertex>>& chosen) {
  if (i == slots.size()) return true;
  const Vertex v = slots[i];
  for (EdgeId e : g.incident(v)) {
    if (e < min_id || taken[e] || blocked.contains(e) || g.edge(e).is_loop()) {
      continue;
    }
    taken[e] = true;
    chosen.push_back({e, v});
    // Slots of one vertex take increasing ids so each set is tried once.
    const EdgeId next_min =
        (i + 1 < slots.size() && slots[i + 1] == v) ? e + 1 : 0;
    if (pick_in_edges(g, blocked, slots, i + 1, next_min, taken, chosen)) {
      return true;
    }
    chosen.pop_back();
    taken[e] = false;
  }
  return false;
}

}  // namespace

PreorientationExtension extend_preorientation(
    const Multigraph& g, int m, const EdgeSubset& forced,
    std::span<const DirectedEdge> preoriented, const VertexMap& r,
    std::optional<Vertex> z) {
  const int n = g.num_vertices();
  const int num_edges = g.num_edges();
  if (static_cast<int>(r.size()) != n) {
    fail(ErrorKind::kInvalidInput, "r has the wrong size");
  }
  EdgeSubset excluded(num_edges);
  for (const DirectedEdge& d : preoriented) {
    if (d.edge < 0 || d.edge >= num_edges || excluded.contains(d.edge)) {
      fail(ErrorKind::kInvalidInput, "bad pre-oriented edge " +
                                         std::to_string(d.edge));
    }
    excluded.insert(d.edge);
  }
  long long r_sum = 0;
  for (int x : r) {
    if (x < 0) fail(ErrorKind::kInvalidInput, "r must be nonnegative");
    r_sum += x;
  }
  if (r_sum != m - excluded.size()) {
    fail(ErrorKind::kInvalidInput,
         "sum of r is " + std::to_string(r_sum) + ", expected m - |M0| = " +
             std::to_string(m - excluded.size()));
  }

  std::vector<Vertex> slots;
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < r[v]; ++i) slots.push_back(v);
  }
  std::vector<bool> taken(num_edges, false);
  std::vector<std::pair<EdgeId, Vertex>> chosen;
  if (!pick_in_edges(g, forced | excluded, slots, 0, 0, taken, chosen)) {
    fail(ErrorKind::kPreconditionUnmet,
         "no loopless factor outside M and M0 with in-degree r");
  }
  EdgeSubset extra(num_edges);
  for (auto [e, v] : chosen) extra.insert(e);

  const BasicDecomposition base =
      basic_decomposition(g, m, forced, excluded | extra, z);

  // Leftover part: the demand was met by out-degree, the corollary needs it
  // as in-degree.
  Orientation o = base.orientation.reversed();
  for (const DirectedEdge& d : preoriented) o.set_forward(d.edge, d.forward);
  for (auto [e, v] : chosen) o.set_tail(e, g.edge(e).other(v));

  // Tree i is oriented away from a root; vertex v roots r(v) + d-_{M0}(v)
  // trees, so d-_F(v) = m - r(v) - d-_{M0}(v).
  std::vector<Vertex> roots;
  for (Vertex v = 0; v < n; ++v) {
    int c = r[v];
    for (const DirectedEdge& d : preoriented) c += o.head(d.edge) == v ? 1 : 0;
    for (int i = 0; i < c; ++i) roots.push_back(v);
  }
  for (size_t i = 0; i < base.trees.trees.size(); ++i) {
    const EdgeSubset& tree = base.trees.trees[i];
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{roots[i]};
    seen[roots[i]] = true;
    while (!stack.empty()) {
      const Vertex a = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(a)) {
        if (!tree.contains(e)) continue;
        const Vertex b = g.edge(e).other(a);
        if (seen[b]) continue;
        seen[b] = true;
        o.set_tail(e, a);
        stack.push_back(b);
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    const int cap = (z && *z == v) ? half_floor(g.degree(v)) : half_ceil(g.degree(v));
    if (o.out_degree(v) > cap) {
      fail(ErrorKind::kContractViolation,
           "out-degree bound fails at vertex " + std::to_string(v), {v});
    }
  }
  return PreorientationExtension{base.h, base.trees, extra, o};
}

}  // namespace ff
