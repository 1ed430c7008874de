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

#include "ff/connectivity.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "matroid.hpp"

namespace ff {

int edge_connectivity(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return kUnbounded;
  // Stoer-Wagner on the weight matrix of parallel classes; loops never cross
  // a cut.
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    ++w[e.u][e.v];
    ++w[e.v][e.u];
  }
  std::vector<int> alive(n);
  for (int i = 0; i < n; ++i) alive[i] = i;
  long long best = std::numeric_limits<long long>::max();
  while (alive.size() > 1) {
    const int k = static_cast<int>(alive.size());
    std::vector<long long> weight(k, 0);
    std::vector<bool> added(k, false);
    int prev = -1;
    int last = -1;
    for (int step = 0; step < k; ++step) {
      int pick = -1;
      for (int i = 0; i < k; ++i) {
        if (!added[i] && (pick < 0 || weight[i] > weight[pick])) pick = i;
      }
      added[pick] = true;
      prev = last;
      last = pick;
      if (step == k - 1) {
        best = std::min(best, weight[pick]);
        break;
      }
      for (int i = 0; i < k; ++i) {
        if (!added[i]) weight[i] += w[alive[pick]][alive[i]];
      }
    }
    const int s = alive[prev];
    const int t = alive[last];
    for (int i = 0; i < n; ++i) {
      w[s][i] += w[t][i];
      w[i][s] = w[s][i];
    }
    w[s][s] = 0;
    alive.erase(alive.begin() + last);
  }
  return static_cast<int>(best);
}

EdgeSubset TreePacking::union_edges(int num_edges) const {
  EdgeSubset out(num_edges);
  for (const EdgeSubset& t : trees) out |= t;
  return out;
}

std::optional<TreePacking> tree_packing(const Multigraph& g, int m) {
  return tree_packing(g, EdgeSubset::all(g.num_edges()), m);
}

std::optional<TreePacking> tree_packing(const Multigraph& g,
                                        const EdgeSubset& within, int m) {
  if (m < 0) fail(ErrorKind::kInvalidInput, "negative tree count");
  const int n = g.num_vertices();
  TreePacking packing;
  if (m == 0) return packing;
  if (n <= 1) {
    packing.trees.assign(m, EdgeSubset(g.num_edges()));
    return packing;
  }
  int usable = 0;
  for (EdgeId e : within.ids()) usable += g.edge(e).is_loop() ? 0 : 1;
  if (usable < m * (n - 1)) return std::nullopt;

  std::vector<std::unique_ptr<detail::GraphicMatroid>> forests;
  std::vector<detail::Matroid*> ms;
  for (int i = 0; i < m; ++i) {
    forests.push_back(std::make_unique<detail::GraphicMatroid>(g, within));
    ms.push_back(forests.back().get());
  }
  const std::vector<EdgeId> order = within.ids();
  detail::grow_partition(ms, order, g.num_edges());
  for (const auto& f : forests) {
    const std::vector<EdgeId> ids = f->members();
    if (static_cast<int>(ids.size()) != n - 1) return std::nullopt;
    packing.trees.emplace_back(g.num_edges(), ids);
  }
  return packing;
}

int max_packing(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return kUnbounded;
  int m = 0;
  while (tree_packing(g, m + 1)) ++m;
  return m;
}

bool is_tree_packing(const Multigraph& g, const TreePacking& p, int m) {
  if (static_cast<int>(p.trees.size()) != m) return false;
  EdgeSubset seen(g.num_edges());
  const int need = std::max(0, g.num_vertices() - 1);
  for (const EdgeSubset& t : p.trees) {
    if (t.universe() != g.num_edges()) return false;
    if (t.size() != need || !t.disjoint_from(seen)) return false;
    if (!is_connected(g, t)) return false;
    seen |= t;
  }
  return true;
}

std::vector<std::vector<Vertex>> VertexPartition::blocks() const {
  std::vector<std::vector<Vertex>> out(num_blocks);
  for (Vertex v = 0; v < static_cast<int>(block_of.size()); ++v) {
    out[block_of[v]].push_back(v);
  }
  return out;
}

void for_each_partition(
    int n, const std::function<bool(const VertexPartition&)>& visit) {
  if (n <= 0) {
    visit(VertexPartition{});
    return;
  }
  VertexPartition p;
  p.block_of.assign(n, 0);
  // prefix_max[i] = max label among positions 0..i.
  std::vector<int> prefix_max(n, 0);
  while (true) {
    p.num_blocks = prefix_max[n - 1] + 1;
    if (!visit(p)) return;
    int i = n - 1;
    while (i > 0 && p.block_of[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++p.block_of[i];
    prefix_max[i] = std::max(prefix_max[i - 1], p.block_of[i]);
    for (int j = i + 1; j < n; ++j) {
      p.block_of[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

int partition_crossing(const Multigraph& g, const VertexPartition& p) {
  std::vector<int> block_size(p.num_blocks, 0);
  for (int b : p.block_of) ++block_size[b];
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      count += block_size[p.block_of[e.u]] == 1 ? 1 : 0;
    } else if (p.block_of[e.u] != p.block_of[e.v]) {
      ++count;
    }
  }
  return count;
}

int partition_requirement(const VertexPartition& p, int m, const VertexMap& l) {
  std::vector<int> block_size(p.num_blocks, 0);
  for (int b : p.block_of) ++block_size[b];
  int total = m * (p.num_blocks - 1);
  for (Vertex v = 0; v < static_cast<int>(p.block_of.size()); ++v) {
    if (block_size[p.block_of[v]] == 1) total += l[v];
  }
  return total;
}

std::optional<PartitionWitness> partition_connectivity_check(
    const Multigraph& g, int m, const VertexMap& l, const Limits& limits) {
  const int n = g.num_vertices();
  if (static_cast<int>(l.size()) != n) {
    fail(ErrorKind::kInvalidInput, "demand map size differs from vertex count");
  }
  if (n > limits.partition_vertices) {
    fail(ErrorKind::kCapacity, "partition enumeration limited to " +
                                   std::to_string(limits.partition_vertices) +
                                   " vertices");
  }
  std::optional<PartitionWitness> witness;
  for_each_partition(n, [&](const VertexPartition& p) {
    const int observed = partition_crossing(g, p);
    const int required = partition_requirement(p, m, l);
    if (observed < required &&
        (!witness || observed - required < witness->observed - witness->required)) {
      witness = PartitionWitness{p, observed, required};
    }
    return true;
  });
  return witness;
}

std::optional<JointSplit> split_trees_and_demand(const Multigraph& g,
                                                 const EdgeSubset& usable,
                                                 int m, int m0,
                                                 const VertexMap& l,
                                                 const EdgeSubset& forced) {
  const int n = g.num_vertices();
  const int num_edges = g.num_edges();
  if (m < 0 || m0 < 0) fail(ErrorKind::kInvalidInput, "negative tree count");
  if (static_cast<int>(l.size()) != n) {
    fail(ErrorKind::kInvalidInput, "demand map size differs from vertex count");
  }
  if (!forced.is_subset_of(usable)) return std::nullopt;

  // Trees of H take the forced edges; H0 trees and the demand part may not.
  const EdgeSubset free_part = usable - forced;
  VertexMap capacity(n);
  long long demand_total = 0;
  for (Vertex v = 0; v < n; ++v) {
    capacity[v] = std::max(0, l[v]);
    demand_total += capacity[v];
  }
  const bool trivial_trees = n <= 1;
  std::vector<std::unique_ptr<detail::GraphicMatroid>> main_forests;
  std::vector<std::unique_ptr<detail::GraphicMatroid>> extra_forests;
  detail::DemandMatroid demand(g, capacity, free_part);
  std::vector<detail::Matroid*> ms;
  if (!trivial_trees) {
    for (int i = 0; i < m; ++i) {
      main_forests.push_back(std::make_unique<detail::GraphicMatroid>(g, usable));
      ms.push_back(main_forests.back().get());
    }
    for (int i = 0; i < m0; ++i) {
      extra_forests.push_back(
          std::make_unique<detail::GraphicMatroid>(g, free_part));
      ms.push_back(extra_forests.back().get());
    }
  }
  ms.push_back(&demand);

  const std::vector<EdgeId> forced_ids = forced.ids();
  const int placed_forced = detail::grow_partition(ms, forced_ids, num_edges);
  if (placed_forced != static_cast<int>(forced_ids.size())) return std::nullopt;
  const std::vector<EdgeId> rest_ids = free_part.ids();
  detail::grow_partition(ms, rest_ids, num_edges);

  JointSplit out{EdgeSubset(num_edges), EdgeSubset(num_edges), {}, {},
                 Orientation(g)};
  const int tree_size = trivial_trees ? 0 : n - 1;
  if (trivial_trees) {
    out.trees.trees.assign(m, EdgeSubset(num_edges));
    out.trees0.trees.assign(m0, EdgeSubset(num_edges));
  }
  for (const auto& f : main_forests) {
    const std::vector<EdgeId> ids = f->members();
    if (static_cast<int>(ids.size()) != tree_size) return std::nullopt;
    out.trees.trees.emplace_back(num_edges, ids);
  }
  for (const auto& f : extra_forests) {
    const std::vector<EdgeId> ids = f->members();
    if (static_cast<int>(ids.size()) != tree_size) return std::nullopt;
    out.trees0.trees.emplace_back(num_edges, ids);
  }
  const std::vector<EdgeId> demand_ids = demand.members();
  if (static_cast<long long>(demand_ids.size()) != demand_total) {
    return std::nullopt;
  }
  out.h = out.trees.union_edges(num_edges);
  out.h0 = out.trees0.union_edges(num_edges);
  for (EdgeId e : demand_ids) out.orientation.set_tail(e, demand.owner(e));
  return out;
}

PartitionSplit decompose_partition_connected(const Multigraph& g, int m,
                                             const VertexMap& l,
                                             const EdgeSubset& forced) {
  const int n = g.num_vertices();
  if (static_cast<int>(l.size()) != n) {
    fail(ErrorKind::kInvalidInput, "demand map size differs from vertex count");
  }
  if (forced.universe() != g.num_edges()) {
    fail(ErrorKind::kInvalidInput, "edge subset belongs to another graph");
  }
  for (EdgeId e : forced.ids()) {
    if (g.edge(e).is_loop()) {
      fail(ErrorKind::kPreconditionUnmet,
           "forced edge " + std::to_string(e) + " is a loop");
    }
  }
  const std::vector<int> forced_degree = degrees_in(g, forced);
  for (Vertex v = 0; v < n; ++v) {
    if (forced_degree[v] > m) {
      fail(ErrorKind::kPreconditionUnmet,
           "forced edges exceed degree " + std::to_string(m) + " at vertex " +
               std::to_string(v),
           {v});
    }
  }
  const bool checked = n <= Limits{}.partition_vertices;
  if (checked) {
    if (auto w = partition_connectivity_check(g, m, l)) {
      std::ostringstream msg;
      msg << "not (" << m << ",l)-partition-connected: partition with "
          << w->partition.num_blocks << " blocks has " << w->observed
          << " crossing edges, needs " << w->required;
      fail(ErrorKind::kPreconditionUnmet, msg.str(), w->partition.block_of);
    }
  }
  auto split = split_trees_and_demand(g, EdgeSubset::all(g.num_edges()), m, 0,
                                      l, forced);
  if (!split) {
    fail(checked ? ErrorKind::kContractViolation : ErrorKind::kPreconditionUnmet,
         "no tree-connected factor with the required demand orientation");
  }
  return PartitionSplit{split->h, split->trees, split->orientation};
}

}  // namespace ff
