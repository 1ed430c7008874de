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

#include "matroid.hpp"

#include <deque>

#include "ff/error.hpp"

namespace ff::detail {

GraphicMatroid::GraphicMatroid(const Multigraph& g, EdgeSubset allowed)
    : g_(g), allowed_(std::move(allowed)), members_(g.num_edges()) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).is_loop()) allowed_.erase(e);
  }
}

void GraphicMatroid::rebuild() {
  adj_.assign(g_.num_vertices(), {});
  for (EdgeId e : members_.ids()) {
    adj_[g_.edge(e).u].push_back(e);
    adj_[g_.edge(e).v].push_back(e);
  }
  dirty_ = false;
}

void GraphicMatroid::exchanges(EdgeId x, bool* free,
                               std::vector<EdgeId>* swaps) {
  if (dirty_) rebuild();
  const Vertex s = g_.edge(x).u;
  const Vertex t = g_.edge(x).v;
  std::vector<EdgeId> via(g_.num_vertices(), -1);
  std::vector<bool> seen(g_.num_vertices(), false);
  std::deque<Vertex> queue{s};
  seen[s] = true;
  while (!queue.empty() && !seen[t]) {
    const Vertex a = queue.front();
    queue.pop_front();
    for (EdgeId e : adj_[a]) {
      const Vertex b = g_.edge(e).other(a);
      if (seen[b]) continue;
      seen[b] = true;
      via[b] = e;
      queue.push_back(b);
    }
  }
  if (!seen[t]) {
    *free = true;
    return;
  }
  for (Vertex w = t; w != s; w = g_.edge(via[w]).other(w)) {
    swaps->push_back(via[w]);
  }
}

void GraphicMatroid::erase(EdgeId y) {
  members_.erase(y);
  dirty_ = true;
}

void GraphicMatroid::insert(EdgeId x) {
  members_.insert(x);
  dirty_ = true;
}

DemandMatroid::DemandMatroid(const Multigraph& g, VertexMap capacity,
                             EdgeSubset allowed)
    : g_(g),
      capacity_(std::move(capacity)),
      allowed_(std::move(allowed)),
      owner_(g.num_edges(), -1),
      load_(g.num_vertices(), 0) {
  for (int& c : capacity_) c = std::max(c, 0);
}

std::vector<EdgeId> DemandMatroid::members() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g_.num_edges(); ++e) {
    if (owner_[e] >= 0) out.push_back(e);
  }
  return out;
}

void DemandMatroid::exchanges(EdgeId x, bool* free, std::vector<EdgeId>* swaps) {
  // Alternating search: x may take a slot at either endpoint; a full vertex
  // passes the search on through the edges currently charged to it.
  std::vector<bool> seen_vertex(g_.num_vertices(), false);
  std::vector<bool> seen_edge(g_.num_edges(), false);
  std::deque<Vertex> queue;
  for (Vertex w : {g_.edge(x).u, g_.edge(x).v}) {
    if (!seen_vertex[w]) {
      seen_vertex[w] = true;
      queue.push_back(w);
    }
  }
  while (!queue.empty()) {
    const Vertex w = queue.front();
    queue.pop_front();
    if (load_[w] < capacity_[w]) {
      *free = true;
      return;
    }
    for (EdgeId y : g_.incident(w)) {
      if (owner_[y] != w || seen_edge[y]) continue;
      seen_edge[y] = true;
      swaps->push_back(y);
      const Vertex next = g_.edge(y).other(w);
      if (!seen_vertex[next]) {
        seen_vertex[next] = true;
        queue.push_back(next);
      }
    }
  }
}

void DemandMatroid::erase(EdgeId y) {
  if (owner_[y] < 0) return;
  --load_[owner_[y]];
  owner_[y] = -1;
}

void DemandMatroid::insert(EdgeId x) {
  // Augmenting path from x to a vertex with spare capacity.
  std::vector<EdgeId> entered_by(g_.num_vertices(), -1);
  std::vector<bool> seen(g_.num_vertices(), false);
  std::deque<Vertex> queue;
  for (Vertex w : {g_.edge(x).u, g_.edge(x).v}) {
    if (!seen[w]) {
      seen[w] = true;
      entered_by[w] = x;
      queue.push_back(w);
    }
  }
  Vertex target = -1;
  while (!queue.empty() && target < 0) {
    const Vertex w = queue.front();
    queue.pop_front();
    if (load_[w] < capacity_[w]) {
      target = w;
      break;
    }
    for (EdgeId y : g_.incident(w)) {
      if (owner_[y] != w) continue;
      const Vertex next = g_.edge(y).other(w);
      if (seen[next]) continue;
      seen[next] = true;
      entered_by[next] = y;
      queue.push_back(next);
    }
  }
  if (target < 0) fail(ErrorKind::kContractViolation, "demand matroid insert of a dependent edge");
  ++load_[target];
  Vertex w = target;
  while (true) {
    const EdgeId e = entered_by[w];
    const Vertex previous = owner_[e];
    owner_[e] = w;
    if (e == x) break;
    w = previous;
  }
}

namespace {

bool augment(std::span<Matroid* const> ms, EdgeId source, int num_elements) {
  std::vector<EdgeId> parent(num_elements, -1);
  std::vector<int> parent_matroid(num_elements, -1);
  std::vector<bool> seen(num_elements, false);
  std::deque<EdgeId> queue{source};
  seen[source] = true;
  std::vector<EdgeId> swaps;
  while (!queue.empty()) {
    const EdgeId x = queue.front();
    queue.pop_front();
    for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
      Matroid* m = ms[i];
      if (m->contains(x) || !m->allows(x)) continue;
      bool free = false;
      swaps.clear();
      m->exchanges(x, &free, &swaps);
      if (free) {
        // Collect the moves along the path source -> ... -> x -> matroid i.
        std::vector<std::pair<int, EdgeId>> erases;
        std::vector<std::pair<int, EdgeId>> inserts{{i, x}};
        for (EdgeId cur = x; cur != source; cur = parent[cur]) {
          erases.push_back({parent_matroid[cur], cur});
          inserts.push_back({parent_matroid[cur], parent[cur]});
        }
        for (auto [mi, e] : erases) ms[mi]->erase(e);
        for (auto [mi, e] : inserts) ms[mi]->insert(e);
        return true;
      }
      for (EdgeId y : swaps) {
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        parent_matroid[y] = i;
        queue.push_back(y);
      }
    }
  }
  return false;
}

}  // namespace

int grow_partition(std::span<Matroid* const> matroids,
                   std::span<const EdgeId> order, int num_elements) {
  int placed = 0;
  for (EdgeId s : order) {
    bool present = false;
    for (Matroid* m : matroids) present = present || m->contains(s);
    if (present) continue;
    if (augment(matroids, s, num_elements)) ++placed;
  }
  return placed;
}

}  // namespace ff::detail
