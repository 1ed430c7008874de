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

#include "ff/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ff/error.hpp"

namespace ff {

Multigraph::Multigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), degree_(n, 0), incident_(n) {
  if (n < 0) fail(ErrorKind::kInvalidInput, "negative vertex count");
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const Edge& ed = edges_[e];
    if (!valid_vertex(ed.u) || !valid_vertex(ed.v)) {
      fail(ErrorKind::kInvalidInput,
           "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    degree_[ed.u] += 1;
    degree_[ed.v] += 1;
    incident_[ed.u].push_back(e);
    if (!ed.is_loop()) incident_[ed.v].push_back(e);
  }
}

int Multigraph::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

int Multigraph::num_loops() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Edge& e) { return e.is_loop(); }));
}

EdgeSubset::EdgeSubset(int universe, std::span<const EdgeId> ids)
    : mask_(universe, 0) {
  for (EdgeId e : ids) {
    if (e < 0 || e >= universe) {
      fail(ErrorKind::kInvalidInput, "edge id " + std::to_string(e) + " out of range");
    }
    insert(e);
  }
}

EdgeSubset EdgeSubset::all(int universe) {
  EdgeSubset s(universe);
  std::fill(s.mask_.begin(), s.mask_.end(), 1);
  s.count_ = universe;
  return s;
}

void EdgeSubset::insert(EdgeId e) {
  if (!mask_[e]) {
    mask_[e] = 1;
    ++count_;
  }
}

void EdgeSubset::erase(EdgeId e) {
  if (mask_[e]) {
    mask_[e] = 0;
    --count_;
  }
}

std::vector<EdgeId> EdgeSubset::ids() const {
  std::vector<EdgeId> out;
  out.reserve(count_);
  for (EdgeId e = 0; e < universe(); ++e) {
    if (mask_[e]) out.push_back(e);
  }
  return out;
}

EdgeSubset EdgeSubset::complement() const { return all(universe()) - *this; }

bool EdgeSubset::is_subset_of(const EdgeSubset& o) const {
  for (EdgeId e = 0; e < universe(); ++e) {
    if (mask_[e] && !o.mask_[e]) return false;
  }
  return true;
}

bool EdgeSubset::disjoint_from(const EdgeSubset& o) const {
  for (EdgeId e = 0; e < universe(); ++e) {
    if (mask_[e] && o.mask_[e]) return false;
  }
  return true;
}

EdgeSubset& EdgeSubset::operator|=(const EdgeSubset& o) {
  for (EdgeId e = 0; e < universe(); ++e) {
    if (o.mask_[e]) insert(e);
  }
  return *this;
}

EdgeSubset& EdgeSubset::operator&=(const EdgeSubset& o) {
  for (EdgeId e = 0; e < universe(); ++e) {
    if (!o.mask_[e]) erase(e);
  }
  return *this;
}

EdgeSubset& EdgeSubset::operator-=(const EdgeSubset& o) {
  for (EdgeId e = 0; e < universe(); ++e) {
    if (o.mask_[e]) erase(e);
  }
  return *this;
}

Bipartition Bipartition::from_x(int n, std::span<const Vertex> x) {
  Bipartition p;
  p.in_x = vertex_mask(n, x);
  return p;
}

std::vector<Vertex> Bipartition::x() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(in_x.size()); ++v) {
    if (in_x[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> Bipartition::y() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(in_x.size()); ++v) {
    if (!in_x[v]) out.push_back(v);
  }
  return out;
}

ResidueTarget::ResidueTarget(int modulus, std::vector<int> values)
    : k(modulus), residue(std::move(values)) {
  if (k < 1) fail(ErrorKind::kInvalidInput, "modulus must be positive");
  for (int& r : residue) r = floor_mod(r, k);
}

ResidueTarget ResidueTarget::constant(int n, int modulus, int value) {
  return ResidueTarget(modulus, std::vector<int>(n, value));
}

std::vector<bool> vertex_mask(int n, std::span<const Vertex> a) {
  std::vector<bool> mask(n, false);
  for (Vertex v : a) {
    if (v < 0 || v >= n) {
      fail(ErrorKind::kInvalidInput, "vertex " + std::to_string(v) + " out of range");
    }
    mask[v] = true;
  }
  return mask;
}

CutCounts cut_counts(const Multigraph& g, std::span<const Vertex> a) {
  const std::vector<bool> in_a = vertex_mask(g.num_vertices(), a);
  CutCounts c;
  for (const Edge& e : g.edges()) {
    const bool iu = in_a[e.u];
    const bool iv = in_a[e.v];
    if (iu && iv) {
      ++c.inside;
    } else if (iu != iv) {
      ++c.boundary;
    }
  }
  return c;
}

InducedSubgraph induced(const Multigraph& g, std::span<const Vertex> a) {
  if (a.empty()) fail(ErrorKind::kInvalidInput, "induced subgraph needs a vertex");
  const std::vector<bool> in_a = vertex_mask(g.num_vertices(), a);
  InducedSubgraph out;
  std::vector<Vertex> relabel(g.num_vertices(), -1);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_a[v]) {
      relabel[v] = static_cast<Vertex>(out.vertex_map.size());
      out.vertex_map.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (in_a[ed.u] && in_a[ed.v]) {
      edges.push_back({relabel[ed.u], relabel[ed.v]});
      out.edge_map.push_back(e);
    }
  }
  out.graph = Multigraph(static_cast<int>(out.vertex_map.size()), std::move(edges));
  return out;
}

EdgeSubset bipartite_factor(const Multigraph& g, const Bipartition& p) {
  if (static_cast<int>(p.in_x.size()) != g.num_vertices()) {
    fail(ErrorKind::kInvalidInput, "bipartition does not cover the vertex set");
  }
  EdgeSubset s(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (p.in_x[ed.u] != p.in_x[ed.v]) s.insert(e);
  }
  return s;
}

EdgeSubset SpanningSubgraph::lift(const EdgeSubset& sub, int host_edges) const {
  EdgeSubset out(host_edges);
  for (EdgeId e : sub.ids()) out.insert(edge_map[e]);
  return out;
}

EdgeSubset SpanningSubgraph::restrict(const EdgeSubset& host) const {
  EdgeSubset out(graph.num_edges());
  for (EdgeId j = 0; j < graph.num_edges(); ++j) {
    if (host.contains(edge_map[j])) out.insert(j);
  }
  return out;
}

SpanningSubgraph spanning_subgraph(const Multigraph& g, const EdgeSubset& s) {
  SpanningSubgraph out;
  std::vector<Edge> edges;
  for (EdgeId e : s.ids()) {
    edges.push_back(g.edge(e));
    out.edge_map.push_back(e);
  }
  out.graph = Multigraph(g.num_vertices(), std::move(edges));
  return out;
}

std::vector<int> degrees_in(const Multigraph& g, const EdgeSubset& s) {
  std::vector<int> d(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!s.contains(e)) continue;
    d[g.edge(e).u] += 1;
    d[g.edge(e).v] += 1;
  }
  return d;
}

int edges_between(const Multigraph& g, const EdgeSubset& s,
                  const std::vector<bool>& a, const std::vector<bool>& b) {
  int count = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!s.contains(e)) continue;
    const Edge& ed = g.edge(e);
    if ((a[ed.u] && b[ed.v]) || (b[ed.u] && a[ed.v])) ++count;
  }
  return count;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

bool is_connected(const Multigraph& g, const EdgeSubset& s) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  int components = n;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!s.contains(e)) continue;
    const int a = find_root(parent, g.edge(e).u);
    const int b = find_root(parent, g.edge(e).v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool is_connected(const Multigraph& g) {
  return is_connected(g, EdgeSubset::all(g.num_edges()));
}

bool is_bipartite(const Multigraph& g, const EdgeSubset& s, Bipartition* colouring) {
  const int n = g.num_vertices();
  std::vector<int> colour(n, -1);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        if (!s.contains(e)) continue;
        const Vertex y = g.edge(e).other(x);
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          return false;
        }
      }
    }
  }
  if (colouring != nullptr) {
    colouring->in_x.assign(n, false);
    for (Vertex v = 0; v < n; ++v) colouring->in_x[v] = colour[v] == 0;
  }
  return true;
}

bool is_bipartite(const Multigraph& g, Bipartition* colouring) {
  return is_bipartite(g, EdgeSubset::all(g.num_edges()), colouring);
}

}  // namespace ff
