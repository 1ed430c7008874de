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

#include "ff/pipelines.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "ff/compat.hpp"
#include "ff/connectivity.hpp"
#include "ff/orientation.hpp"

namespace ff {
namespace {

[[noreturn]] void unmet(const std::string& what, std::vector<int> witness = {}) {
  fail(ErrorKind::kPreconditionUnmet, what, std::move(witness));
}

[[noreturn]] void violated(const std::string& what, std::vector<int> witness = {}) {
  fail(ErrorKind::kContractViolation, what, std::move(witness));
}

void require_edge_connected(const Multigraph& g, int need) {
  if (need > 0 && edge_connectivity(g) < need) {
    unmet("graph is not " + std::to_string(need) + "-edge-connected");
  }
}

void require_tree_connected(const Multigraph& g, int need) {
  if (need > 0 && !tree_packing(g, need)) {
    unmet("graph is not " + std::to_string(need) + "-tree-connected");
  }
}

void check_vertex(const Multigraph& g, const std::optional<Vertex>& z) {
  if (z && !g.valid_vertex(*z)) fail(ErrorKind::kInvalidInput, "z is not a vertex");
}

void check_map(const Multigraph& g, const VertexMap& map, const char* name) {
  if (static_cast<int>(map.size()) != g.num_vertices()) {
    fail(ErrorKind::kInvalidInput,
         std::string(name) + " size differs from vertex count");
  }
}

void check_counts(int m, int m0) {
  if (m < 0 || m0 < 0) fail(ErrorKind::kInvalidInput, "negative tree count");
}

EdgeSubset trees_union(const TreePacking& p, int from, int to, int num_edges) {
  EdgeSubset out(num_edges);
  for (int i = from; i < to; ++i) out |= p.trees[i];
  return out;
}

JointSplit split_or_violate(const Multigraph& g, int m, int m0, const VertexMap& l,
                            const EdgeSubset& forced) {
  auto split =
      split_trees_and_demand(g, EdgeSubset::all(g.num_edges()), m, m0, l, forced);
  if (!split) violated("no split into spanning trees and a demand part");
  return *split;
}

void check_forced_factor(const Multigraph& g, const EdgeSubset& forced, int m) {
  if (forced.universe() != g.num_edges()) {
    fail(ErrorKind::kInvalidInput, "edge subset belongs to another graph");
  }
  for (EdgeId e : forced.ids()) {
    if (g.edge(e).is_loop()) unmet("included factor has a loop", {e});
  }
  const auto d = degrees_in(g, forced);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (d[v] > m) unmet("included factor exceeds degree m at a vertex", {v});
  }
}

// Fixes d_H(z) = t when t lies in the window and matches the residue.
void apply_target(const BoundedRequest& req, const std::optional<ResidueTarget>& r,
                  VertexMap& lo, VertexMap& hi) {
  if (!req.target_z) return;
  if (!req.z) fail(ErrorKind::kInvalidInput, "target degree needs a vertex z");
  const Vertex z = *req.z;
  const int t = *req.target_z;
  if (t < lo[z] || t > hi[z]) {
    fail(ErrorKind::kInvalidInput,
         "target degree " + std::to_string(t) + " lies outside [" +
             std::to_string(lo[z]) + ", " + std::to_string(hi[z]) + "]",
         {z});
  }
  if (r && floor_mod(t, r->k) != r->residue[z]) {
    fail(ErrorKind::kInvalidInput, "target degree misses the residue at z", {z});
  }
  lo[z] = hi[z] = t;
}

PipelineResult finish(std::string theorem, const Multigraph& g, const EdgeSubset& h,
                      VertexMap lo, VertexMap hi, FactorContract contract) {
  const auto d = degrees_in(g, h);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (d[v] < lo[v] || d[v] > hi[v]) {
      violated("degree " + std::to_string(d[v]) + " at vertex " + std::to_string(v) +
                   " leaves the window",
               {v});
    }
  }
  contract.lower = lo;
  contract.upper = hi;
  return PipelineResult{std::move(theorem), h, h.complement(), std::move(lo),
                        std::move(hi), std::move(contract), {}};
}

void check_residue(const Multigraph& g, const ResidueTarget& r) {
  if (r.k < 1) fail(ErrorKind::kInvalidInput, "modulus must be positive");
  check_map(g, r.residue, "residue map");
  for (int x : r.residue) {
    if (x < 0 || x >= r.k) fail(ErrorKind::kInvalidInput, "residues must be reduced");
  }
}

void require_compatible(const Multigraph& g, const ResidueTarget& r,
                        std::vector<std::string>* notes) {
  const CompatibilityVerdict v = compatible(g, r);
  if (!v.compatible) unmet("mapping is not compatible", v.witness->x());
  if (notes) notes->push_back("compatibility: " + v.method);
}

ResidueTarget shifted(const ResidueTarget& r, const std::vector<int>& minus) {
  ResidueTarget out = r;
  for (size_t v = 0; v < out.residue.size(); ++v) {
    out.residue[v] = floor_mod(static_cast<long long>(r.residue[v]) - minus[v], r.k);
  }
  return out;
}

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

PipelineResult list_pipeline(const Multigraph& g, const ListRequest& req) {
  const int n = g.num_vertices();
  const int num_edges = g.num_edges();
  check_counts(req.m, req.m0);
  check_vertex(g, req.z);
  if (static_cast<int>(req.lists.size()) != n) {
    fail(ErrorKind::kInvalidInput, "list family size differs from vertex count");
  }
  ListFamily lists = req.lists;
  for (auto& list : lists) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  const EdgeSubset forced = req.forced.value_or(EdgeSubset(num_edges));
  const int m = req.m;
  const int m0 = req.m0;

  EdgeSubset include(num_edges);
  EdgeSubset exclude(num_edges);
  FactorContract contract;
  contract.m = m;
  contract.m0 = m0;
  if (req.forced) contract.include = forced;

  const bool directed = !req.excluded_arcs.empty() || req.r || req.z;
  if (directed) {
    if (m0 != 0) fail(ErrorKind::kInvalidInput, "directed list variant takes m0 = 0");
    require_edge_connected(g, 2 * m);
    EdgeSubset arcs(num_edges);
    std::vector<int> out_arcs(n, 0);
    for (const DirectedEdge& a : req.excluded_arcs) {
      if (a.edge < 0 || a.edge >= num_edges) {
        fail(ErrorKind::kInvalidInput, "arc names no edge");
      }
      arcs.insert(a.edge);
      const Edge& e = g.edge(a.edge);
      ++out_arcs[a.forward ? e.u : e.v];
    }
    VertexMap r(n, 0);
    if (req.r) {
      check_map(g, *req.r, "r");
      r = *req.r;
    } else {
      r[req.z.value_or(0)] = std::max(0, m - arcs.size());
    }
    const auto d_arcs = degrees_in(g, arcs);
    for (Vertex v = 0; v < n; ++v) {
      const int d = g.degree(v);
      if (!lists[v].empty() && (lists[v].front() < m || lists[v].back() > d - d_arcs[v])) {
        unmet("list leaves [m, d - d_M0] at a vertex", {v});
      }
      const int need =
          half_floor(d) + 1 - (req.z && *req.z == v ? 0 : r[v]) - out_arcs[v];
      if (static_cast<int>(lists[v].size()) < need) {
        unmet("list too short at a vertex", {v});
      }
    }
    const PreorientationExtension ext =
        extend_preorientation(g, m, forced, req.excluded_arcs, r, req.z);
    include = ext.f;
    exclude = arcs;
    if (!arcs.empty()) contract.exclude = arcs;
  } else {
    if (req.forced && m0 > 0) {
      fail(ErrorKind::kInvalidInput, "an included factor needs m0 = 0");
    }
    if (req.forced) check_forced_factor(g, forced, m);
    VertexMap l(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      const int d = g.degree(v);
      if (!lists[v].empty() && (lists[v].front() < m || lists[v].back() > d - m0)) {
        unmet("list leaves [m, d - m0] at a vertex", {v});
      }
    }
    if (req.l0) {
      check_map(g, *req.l0, "l0");
      if (auto w = partition_connectivity_check(g, m + m0, *req.l0)) {
        unmet("graph is not (m + m0, l0)-partition-connected", w->partition.block_of);
      }
      for (Vertex v = 0; v < n; ++v) {
        const int need = g.degree(v) + 1 - (*req.l0)[v] - m - m0;
        if (static_cast<int>(lists[v].size()) < need) {
          unmet("list too short at a vertex", {v});
        }
        l[v] = std::max(0, (*req.l0)[v]);
      }
    } else {
      require_edge_connected(g, 2 * m + 2 * m0);
      for (Vertex v = 0; v < n; ++v) {
        if (static_cast<int>(lists[v].size()) < half_ceil(g.degree(v)) + 1) {
          unmet("list too short at a vertex", {v});
        }
        l[v] = std::max(0, half_floor(g.degree(v)) - m - m0);
      }
    }
    const JointSplit split = split_or_violate(g, m, m0, l, forced);
    include = split.h;
    exclude = split.h0;
  }

  FactorContract search;
  search.include = include;
  search.exclude = exclude;
  for (Vertex v = 0; v < n; ++v) search.lists[v] = lists[v];
  auto h = exact_factor(g, search);
  if (!h) violated("no L-factor around the constructed trees");
  VertexMap lo(n, 0);
  VertexMap hi(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    contract.lists[v] = lists[v];
    lo[v] = lists[v].empty() ? 0 : lists[v].front();
    hi[v] = lists[v].empty() ? -1 : lists[v].back();
  }
  return finish("list-edge", g, *h, lo, hi, contract);
}

PipelineResult bounded_pipeline(const Multigraph& g, const BoundedRequest& req) {
  const int n = g.num_vertices();
  const int num_edges = g.num_edges();
  const int m = req.m;
  const int m0 = req.m0;
  check_counts(m, m0);
  check_vertex(g, req.z);
  const EdgeSubset forced = req.forced.value_or(EdgeSubset(num_edges));
  if (req.forced && m0 > 0) {
    fail(ErrorKind::kInvalidInput, "an included factor needs m0 = 0");
  }

  FactorContract contract;
  contract.m = m;
  contract.m0 = m0;
  if (req.forced) contract.include = forced;
  VertexMap lo(n);
  VertexMap hi(n);
  EdgeSubset include(num_edges);
  EdgeSubset exclude(num_edges);
  std::vector<std::string> notes;

  if (req.l0) {
    const VertexMap& l0 = *req.l0;
    check_map(g, l0, "l0");
    const VertexMap s = req.s.value_or(l0);
    check_map(g, s, "s");
    if (m + m0 == 0) unmet("requires m + m0 > 0");
    for (Vertex v = 0; v < n; ++v) {
      if (s[v] > l0[v]) fail(ErrorKind::kInvalidInput, "s exceeds l0", {v});
    }
    if (req.forced) check_forced_factor(g, forced, m);
    if (auto w = partition_connectivity_check(g, m + m0, l0)) {
      unmet("graph is not (m + m0, l0)-partition-connected", w->partition.block_of);
    }
    VertexMap l(n);
    for (Vertex v = 0; v < n; ++v) {
      lo[v] = m + s[v];
      const bool at_z = req.z && *req.z == v;
      hi[v] = std::max(m + s[v] + (at_z ? 0 : 1), g.degree(v) - l0[v] - m0);
      l[v] = std::max(0, l0[v]);
    }
    const JointSplit split = split_or_violate(g, m, m0, l, forced);
    include = split.h;
    exclude = split.h0;
  } else if (req.excluded) {
    if (m0 != 0) fail(ErrorKind::kInvalidInput, "excluded-factor variant takes m0 = 0");
    if (m == 0) unmet("requires m > 0");
    require_edge_connected(g, 2 * m);
    const EdgeSubset& excluded = *req.excluded;
    if (excluded.universe() != num_edges) {
      fail(ErrorKind::kInvalidInput, "edge subset belongs to another graph");
    }
    const auto d0 = degrees_in(g, excluded);
    for (Vertex v = 0; v < n; ++v) {
      if ((!req.z || *req.z != v) && d0[v] >= m) {
        unmet("excluded factor reaches degree m off z", {v});
      }
      const int d = g.degree(v);
      lo[v] = half_floor(d);
      hi[v] = half_ceil(d) + m - d0[v];
    }
    if (req.z) {
      const Vertex z = *req.z;
      if (d0[z] <= 1) {
        hi[z] = half_floor(g.degree(z)) + 1 - d0[z];
      } else {
        notes.push_back("reduced bound at z is below the lower bound; general bound kept");
      }
    }
    const BasicDecomposition dec = basic_decomposition(g, m, forced, excluded, req.z);
    include = dec.h;
    exclude = excluded;
    contract.exclude = excluded;
  } else {
    if (m + m0 == 0) unmet("requires m + m0 > 0");
    require_edge_connected(g, 2 * m + 2 * m0);
    if (req.forced) check_forced_factor(g, forced, m);
    VertexMap l(n);
    for (Vertex v = 0; v < n; ++v) {
      const int d = g.degree(v);
      lo[v] = half_floor(d) - m0;
      hi[v] = half_ceil(d) + m;
      const bool at_z = req.z && *req.z == v;
      l[v] = std::max(0, at_z ? half_ceil(d) : half_floor(d) - m - m0);
    }
    const JointSplit split = split_or_violate(g, m, m0, l, forced);
    include = split.h;
    exclude = split.h0;
  }
  apply_target(req, std::nullopt, lo, hi);

  auto h = gf_factor(g, lo, hi, include, exclude);
  if (!h) violated("no factor inside the window around the constructed trees");
  PipelineResult out = finish("bounded-edge", g, *h, lo, hi, contract);
  out.notes = std::move(notes);
  return out;
}

PipelineResult mod2_pipeline(const Multigraph& g, const ModuloRequest& req) {
  const int n = g.num_vertices();
  const int m = req.m;
  const int m0 = req.m0;
  check_counts(m, m0);
  check_vertex(g, req.z);
  check_residue(g, req.residue);
  if (req.residue.k != 2) fail(ErrorKind::kInvalidInput, "modulus must be 2");
  const long long sum =
      std::accumulate(req.residue.residue.begin(), req.residue.residue.end(), 0LL);
  if (sum % 2 != 0) unmet("residue sum is odd");
  require_edge_connected(g, 2 * m + 2 * m0 + 2);

  VertexMap lo(n);
  VertexMap hi(n);
  VertexMap l(n);
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    lo[v] = half_floor(d) - 1 - m0;
    hi[v] = half_ceil(d) + 1 + m;
    const bool at_z = req.z && *req.z == v;
    l[v] = std::max(0, at_z ? half_ceil(d) : half_floor(d) - m - m0 - 1);
  }
  apply_target(BoundedRequest{m, m0, req.z, req.target_z, {}, {}, {}, {}},
               req.residue, lo, hi);
  // One spare tree joins the demand part, as (1, l0)-partition-connectivity
  // asks.
  const JointSplit split = split_or_violate(g, m, m0 + 1, l, EdgeSubset(g.num_edges()));
  const EdgeSubset exclude = trees_union(split.trees0, 0, m0, g.num_edges());
  auto h = modulo_factor_bounded(g, req.residue, lo, hi, split.h, exclude);
  if (!h) violated("no parity factor inside the window around the constructed trees");
  FactorContract contract;
  contract.m = m;
  contract.m0 = m0;
  contract.residue = req.residue;
  return finish("mod2-main", g, *h, lo, hi, contract);
}

PipelineResult eulerian_bounded_pipeline(const Multigraph& g) {
  ModuloRequest req{ResidueTarget::constant(g.num_vertices(), 2, 0), 1, 0, {}, {}, {}, {}};
  PipelineResult out = mod2_pipeline(g, req);
  out.theorem = "eulerian-bounded";
  return out;
}

PipelineResult quarter_degree_pipeline(const Multigraph& g) {
  const int n = g.num_vertices();
  require_edge_connected(g, 4);
  const EdgeSubset h0 = eulerian_bounded_pipeline(g).factor;
  const SpanningSubgraph sub = spanning_subgraph(g, h0);
  PipelineResult inner;
  try {
    inner = bounded_pipeline(sub.graph, BoundedRequest{1, 0, {}, {}, {}, {}, {}, {}});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kPreconditionUnmet) throw;
    violated(std::string("connected even factor is unusable: ") + e.what());
  }
  VertexMap lo(n);
  VertexMap hi(n);
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    lo[v] = d / 4;
    hi[v] = ceil_div(d - 2, 4) + 2;
  }
  FactorContract contract;
  contract.m = 1;
  return finish("quarter-degree", g, sub.lift(inner.factor, g.num_edges()), lo, hi,
                contract);
}

PipelineResult bip_modk_pipeline(const Multigraph& g, const ModuloRequest& req) {
  const int n = g.num_vertices();
  const int m = req.m;
  const int m0 = req.m0;
  const int k = req.residue.k;
  check_counts(m, m0);
  check_vertex(g, req.z);
  check_residue(g, req.residue);
  if (!is_bipartite(g)) unmet("graph is not bipartite");
  if (k == 1) {
    PipelineResult out = bounded_pipeline(
        g, BoundedRequest{m, m0, req.z, req.target_z, {}, {}, req.l0, req.s});
    out.theorem = "bip-modk-edge";
    out.contract.residue = req.residue;
    out.notes.push_back("modulus 1 reduces to bounded degrees");
    return out;
  }
  std::vector<std::string> notes;
  require_compatible(g, req.residue, &notes);

  VertexMap lo(n);
  VertexMap hi(n);
  VertexMap l(n);
  if (req.l0) {
    const VertexMap& l0 = *req.l0;
    check_map(g, l0, "l0");
    if (auto w = partition_connectivity_check(g, m + m0 + 2 * k - 2, l0)) {
      unmet("graph is not (m + m0 + 2k - 2, l0)-partition-connected",
            w->partition.block_of);
    }
    for (Vertex v = 0; v < n; ++v) {
      const int slack = (req.z && *req.z == v) ? 0 : k - 1;
      const int s = req.s ? (*req.s)[v] : l0[v] + slack;
      if (s > l0[v] + slack) fail(ErrorKind::kInvalidInput, "s exceeds its cap", {v});
      lo[v] = m + s;
      hi[v] = std::max(m + s + k - 1, g.degree(v) - l0[v] - slack - m0);
      l[v] = std::max(0, l0[v]);
    }
  } else {
    require_edge_connected(g, 2 * m + 2 * m0 + 4 * k - 4);
    for (Vertex v = 0; v < n; ++v) {
      const int d = g.degree(v);
      lo[v] = half_floor(d) - (k - 1) - m0;
      hi[v] = half_ceil(d) + (k - 1) + m;
      const bool at_z = req.z && *req.z == v;
      l[v] = std::max(0, at_z ? half_ceil(d) : half_floor(d) - m - m0 - (2 * k - 2));
    }
  }
  apply_target(BoundedRequest{m, m0, req.z, req.target_z, {}, {}, {}, {}},
               req.residue, lo, hi);
  const JointSplit split =
      split_or_violate(g, m, m0 + 2 * k - 2, l, EdgeSubset(g.num_edges()));
  const EdgeSubset exclude = trees_union(split.trees0, 0, m0, g.num_edges());
  auto h = modulo_factor_bounded(g, req.residue, lo, hi, split.h, exclude);
  if (!h) violated("no modulo factor inside the window around the constructed trees");
  FactorContract contract;
  contract.m = m;
  contract.m0 = m0;
  contract.residue = req.residue;
  PipelineResult out = finish("bip-modk-edge", g, *h, lo, hi, contract);
  out.notes = std::move(notes);
  return out;
}

PipelineResult gen_modk_pipeline(const Multigraph& g, const ModuloRequest& req) {
  const int n = g.num_vertices();
  const int num_edges = g.num_edges();
  const int m = req.m;
  const int m0 = req.m0;
  const int k = req.residue.k;
  check_counts(m, m0);
  check_residue(g, req.residue);
  if (k == 1) {
    PipelineResult out =
        bounded_pipeline(g, BoundedRequest{m, m0, {}, {}, {}, {}, {}, {}});
    out.theorem = "gen-modk";
    out.contract.residue = req.residue;
    out.notes.push_back("modulus 1 reduces to bounded degrees");
    return out;
  }
  if (m + m0 == 0) unmet("requires m + m0 > 0");
  std::vector<std::string> notes;
  require_compatible(g, req.residue, &notes);
  const bool odd_k = k % 2 != 0;
  require_tree_connected(g, 2 * m + 2 * m0 + 6 * k - 5 - (odd_k ? 1 : 0));

  // Even k: Eulerian (2m + 2m0 - 1)-tree part; odd k: (2m + 2m0)-tree part and
  // an Eulerian second part.
  const BiIndexSplit split =
      odd_k ? decompose_by_bi_index(g, 2 * m + 2 * m0, 3 * k - 4, k - 1,
                                    ParitySide::kSecond)
            : decompose_by_bi_index(g, 2 * m + 2 * m0 - 1, 3 * k - 3, k - 1,
                                    ParitySide::kFirst);
  notes.push_back("inside edges of the second part: " + std::to_string(split.inside));

  const SpanningSubgraph g1 = spanning_subgraph(g, split.g1);
  PipelineResult first;
  try {
    first = bounded_pipeline(g1.graph, BoundedRequest{m, m0, {}, {}, {}, {}, {}, {}});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kPreconditionUnmet) throw;
    violated(std::string("first part unusable: ") + e.what());
  }
  const EdgeSubset h1 = g1.lift(first.factor, num_edges);

  const SpanningSubgraph g2 = spanning_subgraph(g, split.g2);
  const ResidueTarget f2 = shifted(req.residue, degrees_in(g, h1));
  CompatibilityOptions options;
  options.hint = split.partition;
  const CompatibilityVerdict v = compatible(g2.graph, f2, options);
  if (!v.compatible) {
    violated("shifted mapping is not compatible with the second part",
             v.witness->x());
  }
  notes.push_back("shifted compatibility: " + v.method);
  VertexMap lo2(n);
  VertexMap hi2(n);
  for (Vertex w = 0; w < n; ++w) {
    const int d = g2.graph.degree(w);
    lo2[w] = half_floor(d) - (k - 1);
    hi2[w] = half_ceil(d) + (k - 1);
  }
  auto h2 = modulo_factor_bounded(g2.graph, f2, lo2, hi2,
                                  EdgeSubset(g2.graph.num_edges()),
                                  EdgeSubset(g2.graph.num_edges()));
  if (!h2) violated("no low-bi-index modulo factor in the second part");

  VertexMap lo(n);
  VertexMap hi(n);
  for (Vertex w = 0; w < n; ++w) {
    const int d = g.degree(w);
    lo[w] = half_floor(d) - (k - 1) - m0;
    hi[w] = half_ceil(d) + (k - 1) + m;
  }
  FactorContract contract;
  contract.m = m;
  contract.m0 = m0;
  contract.residue = req.residue;
  PipelineResult out =
      finish("gen-modk", g, h1 | g2.lift(*h2, num_edges), lo, hi, contract);
  out.notes = std::move(notes);
  return out;
}

PipelineResult modregular_pipeline(const Multigraph& g, const ModRegularRequest& req) {
  const int n = g.num_vertices();
  const int num_edges = g.num_edges();
  const int k = req.k;
  const int m = req.m;
  const int m0 = req.m0;
  check_counts(m, m0);
  check_vertex(g, req.z);
  if (k < 1) fail(ErrorKind::kInvalidInput, "modulus must be positive");
  const ResidueTarget f = req.residue.value_or(ResidueTarget::constant(n, k, 0));
  check_residue(g, f);
  if (f.k != k) fail(ErrorKind::kInvalidInput, "residue modulus differs from k");
  std::vector<std::string> notes;

  // host: the graph the construction runs in; bipartite when requested.
  EdgeSubset host = EdgeSubset::all(num_edges);
  bool bipartite_route = is_bipartite(g);
  if (req.bipartite_required && !bipartite_route) {
    const int need = m + m0 + 2 * k - 2;
    require_tree_connected(g, 2 * need);
    auto p = tree_connected_bipartition(g, host, need);
    if (!p) violated("no tree-connected bipartite factor");
    host -= inside_edges(g, host, *p);
    bipartite_route = true;
  }
  const SpanningSubgraph b = spanning_subgraph(g, host);
  const Multigraph& bg = b.graph;
  require_compatible(bg, f, &notes);

  EdgeSubset g1(bg.num_edges());
  EdgeSubset g2(bg.num_edges());
  std::optional<Bipartition> hint;
  if (bipartite_route) {
    auto packing = tree_packing(bg, m + m0 + 2 * k - 2);
    if (!packing) {
      if (host.size() == num_edges) {
        unmet("graph is not " + std::to_string(m + m0 + 2 * k - 2) +
              "-tree-connected");
      }
      violated("bipartite factor lost its trees");
    }
    g1 = trees_union(*packing, 0, m, bg.num_edges());
    g2 = EdgeSubset::all(bg.num_edges()) - trees_union(*packing, 0, m + m0, bg.num_edges());
    Bipartition colouring;
    if (is_bipartite(bg, &colouring)) hint = colouring;
  } else {
    require_tree_connected(g, m + m0 + 4 * k - 4);
    const BiIndexSplit split = decompose_by_bi_index(g, m + m0, 2 * k - 2, k - 1);
    auto packing = tree_packing(g, split.g1, m + m0);
    if (!packing) violated("first part lost its trees");
    g1 = trees_union(*packing, 0, m, num_edges);
    g2 = split.g2;
    hint = split.partition;
  }

  const SpanningSubgraph s2 = spanning_subgraph(bg, g2);
  const ResidueTarget f2 = shifted(f, degrees_in(bg, g1));
  CompatibilityOptions options;
  options.hint = hint;
  const CompatibilityVerdict v = compatible(s2.graph, f2, options);
  if (!v.compatible) {
    violated("shifted mapping is not compatible with the second part",
             v.witness->x());
  }
  VertexMap lo2(n, 0);
  VertexMap hi2(n);
  for (Vertex w = 0; w < n; ++w) {
    const int d = s2.graph.degree(w);
    hi2[w] = (req.z && *req.z == w) ? d : d - (k - 1);
  }
  auto fpart = modulo_factor_bounded(s2.graph, f2, lo2, hi2,
                                     EdgeSubset(s2.graph.num_edges()),
                                     EdgeSubset(s2.graph.num_edges()));
  if (!fpart) violated("no modulo factor with the upper slack in the second part");
  const EdgeSubset h_host = g1 | s2.lift(*fpart, bg.num_edges());
  const EdgeSubset h = b.lift(h_host, num_edges);

  bool zero = true;
  for (int x : f.residue) zero = zero && x == 0;
  VertexMap lo(n, 0);
  VertexMap hi(n);
  for (Vertex w = 0; w < n; ++w) {
    hi[w] = (req.z && *req.z == w) ? g.degree(w) : g.degree(w) - (k - 1);
    if (zero && m >= 1 && n >= 2) lo[w] = k;
  }
  FactorContract contract;
  contract.m = m;
  contract.m0 = m0;
  contract.residue = f;
  contract.bipartite = req.bipartite_required;
  PipelineResult out = finish("mod-regular", g, h, lo, hi, contract);
  out.notes = std::move(notes);
  return out;
}

PipelineResult bip_eulerian_pipeline(const Multigraph& g) {
  const int n = g.num_vertices();
  const int num_edges = g.num_edges();
  require_tree_connected(g, 4);
  const EdgeSubset all = EdgeSubset::all(num_edges);
  auto p = tree_connected_bipartition(g, all, 2);
  if (!p) violated("no 2-tree-connected bipartite factor");
  auto trees = tree_packing(g, all - inside_edges(g, all, *p), 2);
  if (!trees) violated("bipartite factor lost its trees");
  const EdgeSubset& t1 = trees->trees[0];
  const auto d = degrees_in(g, t1);
  std::vector<bool> odd(n);
  for (Vertex v = 0; v < n; ++v) odd[v] = d[v] % 2 != 0;
  const EdgeSubset h = t1 | parity_join(g, trees->trees[1], odd);
  FactorContract contract;
  contract.m = 1;
  contract.residue = ResidueTarget::constant(n, 2, 0);
  contract.bipartite = true;
  VertexMap lo(n, 0);
  return finish("bip-eulerian", g, h, lo, g.degrees(), contract);
}

std::vector<EdgeSubset> nonbip_eulerian_pipeline(const Multigraph& g, int k) {
  const int n = g.num_vertices();
  if (k < 1) fail(ErrorKind::kInvalidInput, "k must be positive");
  if (bipartite_index(g) < k) unmet("bipartite index is below k");
  require_tree_connected(g, 3 * k);
  const BiIndexSplit split = decompose_by_bi_index(g, k, k, k);
  auto first = tree_packing(g, split.g1, k);
  const EdgeSubset inside = inside_edges(g, split.g2, split.partition);
  auto second = tree_packing(g, split.g2 - inside, k);
  if (!first || !second || inside.size() < k) violated("decomposition lost its trees");
  const std::vector<EdgeId> extra = inside.ids();
  std::vector<EdgeSubset> out;
  for (int i = 0; i < k; ++i) {
    EdgeSubset h = second->trees[i];
    h.insert(extra[i]);
    const auto d = degrees_in(g, h);
    std::vector<bool> odd(n);
    for (Vertex v = 0; v < n; ++v) odd[v] = d[v] % 2 != 0;
    h |= parity_join(g, first->trees[i], odd);
    if (!is_connected(g, h) || is_bipartite(g, h)) {
      violated("constructed subgraph is disconnected or bipartite", {i});
    }
    for (int x : degrees_in(g, h)) {
      if (x % 2 != 0) violated("constructed subgraph has an odd degree", {i});
    }
    out.push_back(h);
  }
  return out;
}

}  // namespace ff
