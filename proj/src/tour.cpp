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

#include "ff/tour.hpp"

#include <algorithm>
#include <string>

#include "ff/error.hpp"

namespace ff {

EdgeSubset TourState::factor_after(int i) const {
  EdgeSubset h(num_original);
  for (int step = 0; step < i; ++step) {
    if (added[step]) h.insert(tour[step]);
  }
  return h;
}

TourState balance_augment(const Multigraph& g, const Orientation& o) {
  TourState state;
  state.num_original = g.num_edges();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    state.tail.push_back(o.tail(e));
    state.head.push_back(o.head(e));
  }
  std::vector<Vertex> sources;
  std::vector<Vertex> targets;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (int i = o.out_degree(v); i < o.in_degree(v); ++i) sources.push_back(v);
    for (int i = o.in_degree(v); i < o.out_degree(v); ++i) targets.push_back(v);
  }
  for (size_t i = 0; i < sources.size(); ++i) {
    state.tail.push_back(sources[i]);
    state.head.push_back(targets[i]);
  }
  return state;
}

namespace {

// Hierholzer with the lowest arc id leaving each vertex taken first.
std::vector<int> eulerian_circuit(const TourState& st, int n, Vertex start) {
  std::vector<std::vector<int>> out(n);
  for (int a = 0; a < st.num_arcs(); ++a) out[st.tail[a]].push_back(a);
  std::vector<size_t> next(n, 0);
  std::vector<std::pair<Vertex, int>> stack{{start, -1}};
  std::vector<int> circuit;
  while (!stack.empty()) {
    const auto [v, via] = stack.back();
    if (next[v] < out[v].size()) {
      const int a = out[v][next[v]++];
      stack.push_back({st.head[a], a});
    } else {
      stack.pop_back();
      if (via >= 0) circuit.push_back(via);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace

TourState tour_construction(const Multigraph& g, const Orientation& o,
                            const EdgeSubset& include, const EdgeSubset& exclude,
                            const VertexMap& s, const VertexMap& s0) {
  const int n = g.num_vertices();
  const int num_edges = g.num_edges();
  if (o.num_edges() != num_edges || include.universe() != num_edges ||
      exclude.universe() != num_edges) {
    fail(ErrorKind::kInvalidInput, "orientation or subsets belong to another graph");
  }
  if (static_cast<int>(s.size()) != n || static_cast<int>(s0.size()) != n) {
    fail(ErrorKind::kInvalidInput, "s or s0 has the wrong size");
  }
  if (!is_connected(g)) fail(ErrorKind::kPreconditionUnmet, "graph is not connected");
  if (include.empty() && exclude.empty()) {
    fail(ErrorKind::kPreconditionUnmet, "F and F0 are both empty");
  }
  if (!include.disjoint_from(exclude)) {
    fail(ErrorKind::kPreconditionUnmet, "F and F0 share an edge");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (s[v] < 0 || s0[v] < 0 || s[v] + s0[v] < o.out_degree(v) - o.in_degree(v)) {
      fail(ErrorKind::kPreconditionUnmet,
           "s + s0 is below d+ - d- at vertex " + std::to_string(v), {v});
    }
  }

  TourState st = balance_augment(g, o);
  const EdgeId first = include.empty() ? exclude.ids().front() : include.ids().front();
  std::vector<int> circuit = eulerian_circuit(st, n, st.tail[first]);
  if (static_cast<int>(circuit.size()) != st.num_arcs()) {
    fail(ErrorKind::kPreconditionUnmet, "augmented digraph has no Eulerian tour");
  }
  std::rotate(circuit.begin(), std::find(circuit.begin(), circuit.end(), first),
              circuit.end());
  st.tour = circuit;
  const int t = static_cast<int>(circuit.size());
  auto arc_at = [&](int i) { return circuit[(i - 1 + t) % t]; };  // e_i, 1-based
  auto in_fixed = [&](int arc) {
    return arc < num_edges && (include.contains(arc) || exclude.contains(arc));
  };

  // W_v for out-surplus v: incoming added arcs e_{i-1} whose successor e_i
  // (wrapping to e_1) is outside F + F0. rank[arc] = j for omega_j(v).
  st.marked_in.assign(n, {});
  st.marked_next.assign(n, {});
  std::vector<int> rank(st.num_arcs(), 0);
  for (int i = 2; i <= t + 1; ++i) {
    const int prev = arc_at(i - 1);
    const int cur = arc_at(i);
    const Vertex v = st.head[prev];
    if (!st.is_added_arc(prev) || o.out_degree(v) <= o.in_degree(v)) continue;
    if (in_fixed(cur)) continue;
    st.marked_in[v].push_back(prev);
    rank[prev] = static_cast<int>(st.marked_in[v].size());
    if (i <= t) st.marked_next[v].push_back(cur);
  }

  st.added.assign(t, false);
  std::vector<bool> in_h(st.num_arcs(), false);
  for (int i = 1; i <= t; ++i) {
    const int cur = arc_at(i);
    bool add = false;
    if (st.is_added_arc(cur) || exclude.contains(cur)) {
      add = false;
    } else if (include.contains(cur)) {
      add = true;
    } else {
      const int prev = arc_at(i - 1);
      const Vertex v = st.tail[cur];
      if (i >= 2 && rank[prev] > 0) {
        add = rank[prev] > s0[v];
      } else {
        add = !in_h[prev];
      }
    }
    st.added[i - 1] = add;
    if (add) in_h[cur] = true;
  }

  const EdgeSubset h = st.factor();
  const std::vector<int> d = degrees_in(g, h);
  const std::vector<int> out_f0 = o.out_degrees(exclude);
  const std::vector<int> out_f = o.out_degrees(include);
  for (Vertex v = 0; v < n; ++v) {
    const int lo = o.out_degree(v) - out_f0[v] - s0[v];
    const int hi = o.in_degree(v) + out_f[v] + s[v];
    if (d[v] < lo || d[v] > hi) {
      fail(ErrorKind::kContractViolation,
           "tour factor degree " + std::to_string(d[v]) + " outside [" +
               std::to_string(lo) + ", " + std::to_string(hi) + "] at vertex " +
               std::to_string(v),
           {v});
    }
  }
  return st;
}

EdgeSubset tour_factor(const Multigraph& g, const Orientation& o,
                       const EdgeSubset& include, const EdgeSubset& exclude,
                       const VertexMap& s, const VertexMap& s0) {
  return tour_construction(g, o, include, exclude, s, s0).factor();
}

}  // namespace ff
