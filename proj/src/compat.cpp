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

#include "ff/compat.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "ff/connectivity.hpp"

namespace ff {
namespace {

void check_target(const Multigraph& g, const ResidueTarget& r) {
  if (r.k < 1) fail(ErrorKind::kInvalidInput, "modulus must be positive");
  if (static_cast<int>(r.residue.size()) != g.num_vertices()) {
    fail(ErrorKind::kInvalidInput, "residue map size differs from vertex count");
  }
}

void check_partition(const Multigraph& g, const Bipartition& p) {
  if (static_cast<int>(p.in_x.size()) != g.num_vertices()) {
    fail(ErrorKind::kInvalidInput, "bipartition size differs from vertex count");
  }
}

int cut_size(const Multigraph& g, const EdgeSubset& s, const Bipartition& p) {
  int cut = 0;
  for (EdgeId e : s.ids()) {
    const Edge& ed = g.edge(e);
    if (p.in_x[ed.u] != p.in_x[ed.v]) ++cut;
  }
  return cut;
}

EdgeSubset union_of(const std::vector<EdgeSubset>& trees, int from, int to,
                    int num_edges) {
  EdgeSubset out(num_edges);
  for (int i = from; i < to; ++i) out |= trees[i];
  return out;
}

// One pass of the decomposition on the edges of `usable`, given a packing of
// at least m1 + 2 m2 spanning trees inside it.
BiIndexSplit split_core(const Multigraph& g, const EdgeSubset& usable,
                        const std::vector<EdgeSubset>& trees, int m1, int m2,
                        int target, bool allow_short, const Limits& limits) {
  const int num_edges = g.num_edges();
  EdgeSubset h2 = union_of(trees, m1, m1 + 2 * m2, num_edges);
  EdgeSubset h1 = usable - h2;
  const EdgeSubset tree1 = union_of(trees, 0, m1, num_edges);

  auto p = tree_connected_bipartition(g, h2, m2, limits);
  if (!p) {
    fail(ErrorKind::kContractViolation,
         "no bipartition leaves the second part " + std::to_string(m2) +
             "-tree-connected");
  }
  const std::vector<EdgeId> inside2 = inside_edges(g, h2, *p).ids();
  const int t = static_cast<int>(inside2.size());
  if (t > target) {
    for (int i = 0; i < t - target; ++i) {
      h2.erase(inside2[i]);
      h1.insert(inside2[i]);
    }
  } else if (t < target) {
    const int need = target - t;
    const EdgeSubset crossing = h2 - inside_edges(g, h2, *p);
    auto q = tree_packing(g, crossing, m2 + need);
    if (!q) {
      fail(ErrorKind::kContractViolation,
           "crossing part lost the trees needed to trade for inside edges");
    }
    const EdgeSubset f1 = union_of(q->trees, m2, m2 + need, num_edges);
    // Inside edges of H1 off its packed trees go first.
    std::vector<EdgeId> cand;
    const std::vector<EdgeId> inside1 = inside_edges(g, h1, *p).ids();
    for (EdgeId e : inside1) {
      if (!tree1.contains(e)) cand.push_back(e);
    }
    for (EdgeId e : inside1) {
      if (tree1.contains(e)) cand.push_back(e);
    }
    if (static_cast<int>(cand.size()) < need && !allow_short) {
      fail(ErrorKind::kContractViolation, "too few inside edges to trade");
    }
    h1 |= f1;
    h2 -= f1;
    for (int i = 0; i < std::min<int>(need, cand.size()); ++i) {
      h1.erase(cand[i]);
      h2.insert(cand[i]);
    }
  }
  BiIndexSplit out{h1, h2, *p, 0, target, true};
  out.inside = inside_edges(g, h2, *p).size();
  return out;
}

}  // namespace

CompatibilityVerdict compatible_wrt(const Multigraph& g, const ResidueTarget& r,
                                    const Bipartition& p) {
  check_target(g, r);
  check_partition(g, p);
  long long sx = 0;
  long long sy = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    (p.in_x[v] ? sx : sy) += r.residue[v];
  }
  int ex = 0;
  int ey = 0;
  for (const Edge& e : g.edges()) {
    if (p.in_x[e.u] && p.in_x[e.v]) ++ex;
    if (!p.in_x[e.u] && !p.in_x[e.v]) ++ey;
  }
  CompatibilityVerdict out;
  out.method = "bipartition";
  // 2x mod k repeats with period k, so k values of x cover every residue.
  for (int x = 0; x <= std::min(ex, r.k - 1); ++x) {
    if (floor_mod(sx - 2LL * x - sy, r.k) == 0) {
      out.side = 'x';
      out.slack = x;
      return out;
    }
  }
  for (int y = 0; y <= std::min(ey, r.k - 1); ++y) {
    if (floor_mod(sx - sy + 2LL * y, r.k) == 0) {
      out.side = 'y';
      out.slack = y;
      return out;
    }
  }
  out.compatible = false;
  out.witness = p;
  return out;
}

void for_each_bipartition(int n, const Limits& limits,
                          const std::function<bool(const Bipartition&)>& visit) {
  if (n > limits.bipartition_vertices) {
    fail(ErrorKind::kCapacity,
         "bipartition enumeration over " + std::to_string(n) +
             " vertices exceeds the cap of " +
             std::to_string(limits.bipartition_vertices));
  }
  Bipartition p{std::vector<bool>(n, true)};
  if (n == 0) {
    visit(p);
    return;
  }
  const long long total = 1LL << (n - 1);
  for (long long mask = 0; mask < total; ++mask) {
    for (int i = 1; i < n; ++i) p.in_x[i] = ((mask >> (i - 1)) & 1) == 0;
    if (!visit(p)) return;
  }
}

CompatibilityVerdict compatible(const Multigraph& g, const ResidueTarget& r,
                                const CompatibilityOptions& options) {
  check_target(g, r);
  const int n = g.num_vertices();
  if (r.k == 1) return CompatibilityVerdict{true, std::nullopt, 0, 0, "modulus-one"};
  if (options.shortcuts && n >= 2) {
    Bipartition colouring;
    if (is_connected(g) && is_bipartite(g, &colouring) &&
        edge_connectivity(g) >= 2 * r.k - 1) {
      CompatibilityVerdict v = compatible_wrt(g, r, colouring);
      v.method = "bipartite-unique";
      v.side = 0;
      v.slack = 0;
      return v;
    }
    if (options.hint) {
      check_partition(g, *options.hint);
      const int inside =
          inside_edges(g, EdgeSubset::all(g.num_edges()), *options.hint).size();
      if (inside < r.k - 1 && edge_connectivity(g) >= 2 * r.k - 3) {
        CompatibilityVerdict v = compatible_wrt(g, r, *options.hint);
        if (v.compatible) {
          v.method = "low-bi-index";
          v.side = 0;
          v.slack = 0;
          return v;
        }
      }
    }
  }
  CompatibilityVerdict out{true, std::nullopt, 0, 0, "enumeration"};
  for_each_bipartition(n, options.limits, [&](const Bipartition& p) {
    CompatibilityVerdict v = compatible_wrt(g, r, p);
    if (v.compatible) return true;
    out.compatible = false;
    out.witness = p;
    return false;
  });
  return out;
}

EdgeSubset inside_edges(const Multigraph& g, const EdgeSubset& s,
                        const Bipartition& p) {
  check_partition(g, p);
  EdgeSubset out(g.num_edges());
  for (EdgeId e : s.ids()) {
    const Edge& ed = g.edge(e);
    if (p.in_x[ed.u] == p.in_x[ed.v]) out.insert(e);
  }
  return out;
}

Bipartition max_cut(const Multigraph& g, const Limits& limits) {
  const EdgeSubset all = EdgeSubset::all(g.num_edges());
  Bipartition best;
  int best_cut = -1;
  for_each_bipartition(g.num_vertices(), limits, [&](const Bipartition& p) {
    const int cut = cut_size(g, all, p);
    if (cut > best_cut) {
      best_cut = cut;
      best = p;
    }
    return true;
  });
  return best;
}

int bipartite_index(const Multigraph& g, const Limits& limits) {
  const Bipartition p = max_cut(g, limits);
  return inside_edges(g, EdgeSubset::all(g.num_edges()), p).size();
}

std::optional<Bipartition> tree_connected_bipartition(const Multigraph& g,
                                                      const EdgeSubset& within,
                                                      int m,
                                                      const Limits& limits) {
  const int n = g.num_vertices();
  std::vector<std::pair<int, Bipartition>> order;
  for_each_bipartition(n, limits, [&](const Bipartition& p) {
    order.emplace_back(cut_size(g, within, p), p);
    return true;
  });
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  const int needed = m * std::max(0, n - 1);
  for (const auto& [cut, p] : order) {
    if (cut < needed) break;
    if (m == 0 || tree_packing(g, within - inside_edges(g, within, p), m)) {
      return p;
    }
  }
  return std::nullopt;
}

EdgeSubset parity_join(const Multigraph& g, const EdgeSubset& forest,
                       const std::vector<bool>& odd) {
  const int n = g.num_vertices();
  if (static_cast<int>(odd.size()) != n) {
    fail(ErrorKind::kInvalidInput, "parity marks size differs from vertex count");
  }
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(n);
  for (EdgeId e : forest.ids()) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    adj[ed.u].emplace_back(ed.v, e);
    adj[ed.v].emplace_back(ed.u, e);
  }
  EdgeSubset join(g.num_edges());
  std::vector<bool> parity = odd;
  std::vector<bool> seen(n, false);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<Vertex> parent(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> order{root};
    seen[root] = true;
    for (size_t i = 0; i < order.size(); ++i) {
      const Vertex v = order[i];
      for (const auto& [w, e] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        parent_edge[w] = e;
        order.push_back(w);
      }
    }
    for (size_t i = order.size(); i-- > 1;) {
      const Vertex v = order[i];
      if (!parity[v]) continue;
      join.insert(parent_edge[v]);
      parity[parent[v]] = !parity[parent[v]];
    }
    if (parity[root]) {
      fail(ErrorKind::kInvalidInput,
           "a tree of the forest holds an odd number of marked vertices",
           {root});
    }
  }
  return join;
}

BiIndexSplit decompose_by_bi_index(const Multigraph& g, int m1, int m2, int k0,
                                   ParitySide parity, const Limits& limits) {
  if (m1 < 0 || k0 < 0 || m2 < k0) {
    fail(ErrorKind::kInvalidInput, "requires m1 >= 0 and m2 >= k0 >= 0");
  }
  const int num_edges = g.num_edges();
  const EdgeSubset all = EdgeSubset::all(num_edges);
  const int base = m1 + 2 * m2;
  const int target = std::min(k0, bipartite_index(g, limits));

  BiIndexSplit out;
  if (parity == ParitySide::kNone) {
    auto packing = tree_packing(g, base);
    if (!packing) {
      fail(ErrorKind::kPreconditionUnmet,
           "graph is not " + std::to_string(base) + "-tree-connected");
    }
    out = split_core(g, all, packing->trees, m1, m2, target, false, limits);
  } else {
    EdgeSubset spare(num_edges);
    if (auto packing = tree_packing(g, base + 2)) {
      out = split_core(g, all, packing->trees, m1, m2 + 1, target, false, limits);
      const EdgeSubset crossing = out.g2 - inside_edges(g, out.g2, out.partition);
      auto q = tree_packing(g, crossing, m2 + 1);
      if (!q) {
        fail(ErrorKind::kContractViolation, "crossing part lost its spare tree");
      }
      spare = q->trees.back();
    } else if (auto packing = tree_packing(g, base + 1)) {
      spare = packing->trees.back();
      packing->trees.pop_back();
      out = split_core(g, all - spare, packing->trees, m1, m2, target, true, limits);
      out.exact = false;
    } else {
      fail(ErrorKind::kPreconditionUnmet,
           "graph is not " + std::to_string(base + 1) + "-tree-connected");
    }
    out.g1 -= spare;
    out.g2 -= spare;
    EdgeSubset& even = parity == ParitySide::kFirst ? out.g1 : out.g2;
    EdgeSubset& other = parity == ParitySide::kFirst ? out.g2 : out.g1;
    const std::vector<int> d = degrees_in(g, even);
    std::vector<bool> odd(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) odd[v] = d[v] % 2 != 0;
    const EdgeSubset join = parity_join(g, spare, odd);
    even |= join;
    other |= spare - join;
    out.inside = inside_edges(g, out.g2, out.partition).size();
  }

  if (!tree_packing(g, out.g1, m1)) {
    fail(ErrorKind::kContractViolation, "first part is not " +
                                            std::to_string(m1) +
                                            "-tree-connected");
  }
  if (!tree_packing(g, out.g2 - inside_edges(g, out.g2, out.partition), m2)) {
    fail(ErrorKind::kContractViolation,
         "crossing part of the second factor is not " + std::to_string(m2) +
             "-tree-connected");
  }
  if (out.exact ? out.inside != target : out.inside < target) {
    fail(ErrorKind::kContractViolation,
         "second factor has " + std::to_string(out.inside) +
             " inside edges, expected " + std::to_string(target));
  }
  return out;
}

}  // namespace ff
