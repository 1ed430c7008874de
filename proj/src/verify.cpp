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

#include "ff/verify.hpp"

#include <string>

#include "ff/connectivity.hpp"

namespace ff {
namespace {

std::string at(Vertex v) { return " at vertex " + std::to_string(v); }

// Two-colouring by BFS over the edges of h; loops are odd cycles.
bool two_colourable(const Multigraph& g, const EdgeSubset& h) {
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> adj(n);
  for (EdgeId e : h.ids()) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) return false;
    adj[ed.u].push_back(ed.v);
    adj[ed.v].push_back(ed.u);
  }
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<Vertex> queue{s};
    for (size_t i = 0; i < queue.size(); ++i) {
      const Vertex v = queue[i];
      for (Vertex w : adj[v]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool degrees_pass(const FactorContract& c, const std::vector<int>& d) {
  for (Vertex v = 0; v < static_cast<int>(d.size()); ++v) {
    if (c.lower && d[v] < (*c.lower)[v]) return false;
    if (c.upper && d[v] > (*c.upper)[v]) return false;
    if (c.residue && floor_mod(d[v], c.residue->k) != c.residue->residue[v]) {
      return false;
    }
    auto it = c.lists.find(v);
    if (it != c.lists.end()) {
      bool found = false;
      for (int x : it->second) found = found || x == d[v];
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

Verdict verify(const Multigraph& g, const EdgeSubset& h, const FactorContract& c) {
  Verdict out;
  auto failed = [&out](std::string what) {
    out.pass = false;
    out.failures.push_back(std::move(what));
  };
  if (h.universe() != g.num_edges()) {
    failed("factor is over " + std::to_string(h.universe()) + " edges, graph has " +
           std::to_string(g.num_edges()));
    return out;
  }
  c.validate(g);
  if (c.include) {
    for (EdgeId e : c.include->ids()) {
      if (!h.contains(e)) failed("included edge " + std::to_string(e) + " missing");
    }
  }
  if (c.exclude) {
    for (EdgeId e : c.exclude->ids()) {
      if (h.contains(e)) failed("excluded edge " + std::to_string(e) + " present");
    }
  }
  const std::vector<int> d = degrees_in(g, h);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::string deg = "degree " + std::to_string(d[v]);
    if (c.lower && d[v] < (*c.lower)[v]) {
      failed(deg + " below " + std::to_string((*c.lower)[v]) + at(v));
    }
    if (c.upper && d[v] > (*c.upper)[v]) {
      failed(deg + " above " + std::to_string((*c.upper)[v]) + at(v));
    }
    if (c.residue && floor_mod(d[v], c.residue->k) != c.residue->residue[v]) {
      failed(deg + " not " + std::to_string(c.residue->residue[v]) + " mod " +
             std::to_string(c.residue->k) + at(v));
    }
    auto it = c.lists.find(v);
    if (it != c.lists.end()) {
      bool found = false;
      for (int x : it->second) found = found || x == d[v];
      if (!found) failed(deg + " not in the list" + at(v));
    }
  }
  if (c.m > 0 && !tree_packing(g, h, c.m)) {
    failed("factor is not " + std::to_string(c.m) + "-tree-connected");
  }
  if (c.m0 > 0 && !tree_packing(g, h.complement(), c.m0)) {
    failed("complement is not " + std::to_string(c.m0) + "-tree-connected");
  }
  if (c.bipartite && !two_colourable(g, h)) failed("factor is not bipartite");
  return out;
}

std::optional<EdgeSubset> brute_force_search(const Multigraph& g,
                                             const FactorContract& c,
                                             const Limits& limits) {
  const int m = g.num_edges();
  if (m > limits.brute_force_edges) {
    fail(ErrorKind::kCapacity, "brute force over " + std::to_string(m) +
                                   " edges exceeds the cap of " +
                                   std::to_string(limits.brute_force_edges));
  }
  c.validate(g);
  const int n = g.num_vertices();
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    std::vector<int> d(n, 0);
    bool ok = true;
    for (EdgeId e = 0; e < m && ok; ++e) {
      const bool in = (mask >> e) & 1;
      if (c.include && c.include->contains(e) && !in) ok = false;
      if (c.exclude && c.exclude->contains(e) && in) ok = false;
      if (in) {
        ++d[g.edge(e).u];
        ++d[g.edge(e).v];
      }
    }
    if (!ok || !degrees_pass(c, d)) continue;
    EdgeSubset h(m);
    for (EdgeId e = 0; e < m; ++e) {
      if ((mask >> e) & 1) h.insert(e);
    }
    if (verify(g, h, c).pass) return h;
  }
  return std::nullopt;
}

}  // namespace ff
