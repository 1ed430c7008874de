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

#include "ff/factor.hpp"

#include <algorithm>
#include <string>

#include "ff/connectivity.hpp"
#include "search.hpp"

namespace ff {

namespace {

void check_size(const VertexMap& map, int n, const char* name) {
  if (static_cast<int>(map.size()) != n) {
    fail(ErrorKind::kInvalidInput,
         std::string(name) + " has " + std::to_string(map.size()) +
             " entries for " + std::to_string(n) + " vertices");
  }
}

void check_subsets(const Multigraph& g, const EdgeSubset& include,
                   const EdgeSubset& exclude) {
  if (include.universe() != g.num_edges() || exclude.universe() != g.num_edges()) {
    fail(ErrorKind::kInvalidInput, "edge subset belongs to another graph");
  }
  if (!include.disjoint_from(exclude)) {
    fail(ErrorKind::kInvalidInput, "include and exclude sets overlap");
  }
}

// Pair data for the generalized Lovasz inequality, written as
// sum_A ta + sum_B tb - w(A,B) with w counting edges outside F and F0.
struct LovaszTerms {
  std::vector<int> ta;
  std::vector<int> tb;
  std::vector<std::vector<int>> w;
};

LovaszTerms lovasz_terms(const Multigraph& g, const VertexMap& lower,
                         const VertexMap& upper, const EdgeSubset& include,
                         const EdgeSubset& exclude) {
  const int n = g.num_vertices();
  const std::vector<int> d_f = degrees_in(g, include);
  const std::vector<int> d_f0 = degrees_in(g, exclude);
  LovaszTerms t{std::vector<int>(n), std::vector<int>(n),
                std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  for (Vertex v = 0; v < n; ++v) {
    t.ta[v] = upper[v] - d_f[v];
    t.tb[v] = g.degree(v) - lower[v] - d_f0[v];
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop() || include.contains(e) || exclude.contains(e)) continue;
    ++t.w[ed.u][ed.v];
    ++t.w[ed.v][ed.u];
  }
  return t;
}

// Walks all labellings (0 = neither, 1 = A, 2 = B) in lexicographic order.
// Returns the best violating labelling, or the first one if first_only.
std::optional<std::vector<int>> find_violation(const LovaszTerms& t, int n,
                                               bool first_only) {
  std::vector<int> label(n, 0);
  std::optional<std::vector<int>> best;
  int best_value = 0;
  int best_size = 0;
  while (true) {
    int value = 0;
    int size = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (label[v] == 1) {
        value += t.ta[v];
        ++size;
        for (Vertex u = 0; u < n; ++u) {
          if (label[u] == 2) value -= t.w[v][u];
        }
      } else if (label[v] == 2) {
        value += t.tb[v];
        ++size;
      }
    }
    if (value < 0 &&
        (!best || value < best_value || (value == best_value && size < best_size))) {
      best = label;
      best_value = value;
      best_size = size;
      if (first_only) return best;
    }
    int i = n - 1;
    while (i >= 0 && label[i] == 2) label[i--] = 0;
    if (i < 0) break;
    ++label[i];
  }
  return best;
}

void check_bounds_pair(const Multigraph& g, const VertexMap& lower,
                       const VertexMap& upper) {
  check_size(lower, g.num_vertices(), "g");
  check_size(upper, g.num_vertices(), "f");
}

}  // namespace

void FactorContract::validate(const Multigraph& g) const {
  const int n = g.num_vertices();
  const EdgeSubset none(g.num_edges());
  check_subsets(g, include.value_or(none), exclude.value_or(none));
  if (lower) check_size(*lower, n, "g");
  if (upper) check_size(*upper, n, "f");
  if (lower && upper) {
    for (Vertex v = 0; v < n; ++v) {
      if ((*lower)[v] > (*upper)[v]) {
        fail(ErrorKind::kInvalidInput, "g exceeds f at vertex " + std::to_string(v),
             {v});
      }
    }
  }
  for (const auto& [v, list] : lists) {
    if (!g.valid_vertex(v)) {
      fail(ErrorKind::kInvalidInput, "list for unknown vertex " + std::to_string(v));
    }
    for (int d : list) {
      if (d < 0 || d > g.degree(v)) {
        fail(ErrorKind::kInvalidInput,
             "list value " + std::to_string(d) + " outside [0, d(v)] at vertex " +
                 std::to_string(v),
             {v});
      }
    }
  }
  if (residue && static_cast<int>(residue->residue.size()) != n) {
    fail(ErrorKind::kInvalidInput, "residue map has the wrong size");
  }
  if (m < 0 || m0 < 0) fail(ErrorKind::kInvalidInput, "negative tree demand");
}

bool FactorContract::degree_allowed(Vertex v, int d) const {
  if (lower && d < (*lower)[v]) return false;
  if (upper && d > (*upper)[v]) return false;
  if (auto it = lists.find(v); it != lists.end()) {
    if (std::find(it->second.begin(), it->second.end(), d) == it->second.end()) {
      return false;
    }
  }
  if (residue && floor_mod(d, residue->k) != residue->residue[v]) return false;
  return true;
}

LovaszWitness lovasz_evaluate(const Multigraph& g, const VertexMap& lower,
                              const VertexMap& upper, const EdgeSubset& include,
                              const EdgeSubset& exclude,
                              const std::vector<Vertex>& a,
                              const std::vector<Vertex>& b) {
  const int n = g.num_vertices();
  const std::vector<bool> in_a = vertex_mask(n, a);
  const std::vector<bool> in_b = vertex_mask(n, b);
  const std::vector<int> d_f = degrees_in(g, include);
  const std::vector<int> d_f0 = degrees_in(g, exclude);
  LovaszWitness w{a, b, 0, 0};
  for (Vertex v : a) {
    w.lhs += d_f[v];
    w.rhs += upper[v];
  }
  for (Vertex v : b) {
    w.lhs += d_f0[v];
    w.rhs += g.degree(v) - lower[v];
  }
  w.lhs -= edges_between(g, include, in_a, in_b);
  w.lhs -= edges_between(g, exclude, in_a, in_b);
  w.rhs -= edges_between(g, EdgeSubset::all(g.num_edges()), in_a, in_b);
  return w;
}

std::optional<LovaszWitness> lovasz_check(const Multigraph& g,
                                          const VertexMap& lower,
                                          const VertexMap& upper,
                                          const EdgeSubset& include,
                                          const EdgeSubset& exclude,
                                          const Limits& limits) {
  const int n = g.num_vertices();
  check_bounds_pair(g, lower, upper);
  check_subsets(g, include, exclude);
  int equal = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (lower[v] > upper[v]) {
      fail(ErrorKind::kInvalidInput, "g exceeds f at vertex " + std::to_string(v),
           {v});
    }
    equal += lower[v] == upper[v] ? 1 : 0;
  }
  if (equal > 1) {
    fail(ErrorKind::kInvalidInput,
         "g = f at " + std::to_string(equal) + " vertices; the criterion allows one");
  }
  if (n > limits.lovasz_vertices) {
    fail(ErrorKind::kCapacity, "pair enumeration limited to " +
                                   std::to_string(limits.lovasz_vertices) +
                                   " vertices");
  }
  const auto label =
      find_violation(lovasz_terms(g, lower, upper, include, exclude), n, false);
  if (!label) return std::nullopt;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (Vertex v = 0; v < n; ++v) {
    if ((*label)[v] == 1) a.push_back(v);
    if ((*label)[v] == 2) b.push_back(v);
  }
  return lovasz_evaluate(g, lower, upper, include, exclude, a, b);
}

std::optional<EdgeSubset> gf_factor(const Multigraph& g, const VertexMap& lower,
                                    const VertexMap& upper,
                                    const EdgeSubset& include,
                                    const EdgeSubset& exclude,
                                    const SolverOptions& options) {
  const int n = g.num_vertices();
  check_bounds_pair(g, lower, upper);
  check_subsets(g, include, exclude);
  for (Vertex v = 0; v < n; ++v) {
    if (lower[v] > upper[v]) return std::nullopt;
  }
  // Any violated pair rules out a factor, whatever g and f are.
  if (options.lovasz_pruning && n <= options.limits.lovasz_vertices &&
      find_violation(lovasz_terms(g, lower, upper, include, exclude), n, true)) {
    return std::nullopt;
  }
  detail::DegreeSearch p{&g, include, exclude, {}, {}};
  p.allowed.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    p.allowed[v].assign(g.degree(v) + 1, 0);
    for (int d = std::max(0, lower[v]); d <= std::min(g.degree(v), upper[v]); ++d) {
      p.allowed[v][d] = 1;
    }
  }
  return detail::search_factor(p);
}

std::optional<EdgeSubset> orientation_gf(const Multigraph& g,
                                         const VertexMap& lower,
                                         const VertexMap& upper,
                                         const EdgeSubset& include,
                                         const EdgeSubset& exclude,
                                         const Orientation& o,
                                         const SolverOptions& options) {
  check_bounds_pair(g, lower, upper);
  check_subsets(g, include, exclude);
  if (o.num_edges() != g.num_edges()) {
    fail(ErrorKind::kInvalidInput, "orientation belongs to another graph");
  }
  const std::vector<int> in_f = o.in_degrees(include);
  const std::vector<int> out_f = o.out_degrees(include);
  const std::vector<int> in_f0 = o.in_degrees(exclude);
  const std::vector<int> out_f0 = o.out_degrees(exclude);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int low_side = o.out_degree(v) + in_f[v] - out_f0[v];
    const int high_side = o.in_degree(v) + out_f[v] - in_f0[v];
    if (lower[v] > low_side || high_side > upper[v]) {
      fail(ErrorKind::kPreconditionUnmet,
           "orientation condition fails at vertex " + std::to_string(v), {v});
    }
  }
  return gf_factor(g, lower, upper, include, exclude, options);
}

namespace {

void check_lists(const Multigraph& g, const ListFamily& lists,
                 const VertexMap& lo, const VertexMap& hi) {
  if (static_cast<int>(lists.size()) != g.num_vertices()) {
    fail(ErrorKind::kInvalidInput, "list family has the wrong size");
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (int d : lists[v]) {
      if (d < lo[v] || d > hi[v]) {
        fail(ErrorKind::kInvalidInput,
             "list value " + std::to_string(d) + " outside [" +
                 std::to_string(lo[v]) + ", " + std::to_string(hi[v]) +
                 "] at vertex " + std::to_string(v),
             {v});
      }
    }
  }
}

}  // namespace

std::optional<EdgeSubset> directed_list_factor(const Multigraph& g,
                                               const Orientation& o,
                                               const ListFamily& lists) {
  const int n = g.num_vertices();
  if (o.num_edges() != g.num_edges()) {
    fail(ErrorKind::kInvalidInput, "orientation belongs to another graph");
  }
  check_lists(g, lists, VertexMap(n, 0), g.degrees());
  detail::DegreeSearch p{&g, EdgeSubset(g.num_edges()), EdgeSubset(g.num_edges()),
                         {}, {}};
  p.allowed.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    p.allowed[v].assign(g.degree(v) + 1, 0);
    for (int d : lists[v]) p.allowed[v][d] = 1;
  }
  return detail::search_factor(p);
}

bool list_sizes_cover_out_degree(const Multigraph& g, const Orientation& o,
                                 const ListFamily& lists) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> distinct = lists[v];
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (static_cast<int>(distinct.size()) < o.out_degree(v) + 1) return false;
  }
  return true;
}

std::optional<EdgeSubset> list_factor_incl_excl(
    const Multigraph& g, const Orientation& o, const ListFamily& lists,
    const EdgeSubset& include, const EdgeSubset& exclude, const VertexMap& s,
    const VertexMap& s0) {
  const int n = g.num_vertices();
  check_subsets(g, include, exclude);
  check_size(s, n, "s");
  check_size(s0, n, "s0");
  const std::vector<int> d_f = degrees_in(g, include);
  const std::vector<int> d_f0 = degrees_in(g, exclude);
  VertexMap hi(n);
  for (Vertex v = 0; v < n; ++v) {
    if (s[v] > d_f[v] || s0[v] > d_f0[v]) {
      fail(ErrorKind::kInvalidInput,
           "s or s0 exceeds the F or F0 degree at vertex " + std::to_string(v),
           {v});
    }
    hi[v] = g.degree(v) - s0[v];
  }
  check_lists(g, lists, s, hi);

  // Shift every list by d_F and drop values the fixed edges cannot reach.
  ListFamily shifted(n);
  for (Vertex v = 0; v < n; ++v) {
    for (int x : lists[v]) {
      if (d_f[v] <= x && x <= g.degree(v) - d_f0[v]) shifted[v].push_back(x - d_f[v]);
    }
  }
  const SpanningSubgraph rest = spanning_subgraph(g, (include | exclude).complement());
  std::vector<bool> forward(rest.graph.num_edges());
  for (EdgeId j = 0; j < rest.graph.num_edges(); ++j) {
    forward[j] = o.forward(rest.edge_map[j]);
  }
  const auto sub =
      directed_list_factor(rest.graph, Orientation(rest.graph, forward), shifted);
  if (!sub) return std::nullopt;
  return rest.lift(*sub, g.num_edges()) | include;
}

bool list_sizes_cover_incl_excl(const Multigraph& g, const Orientation& o,
                                const ListFamily& lists,
                                const EdgeSubset& include,
                                const EdgeSubset& exclude, const VertexMap& s,
                                const VertexMap& s0) {
  const std::vector<int> in_f = o.in_degrees(include);
  const std::vector<int> in_f0 = o.in_degrees(exclude);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> distinct = lists[v];
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const int need = o.out_degree(v) + 1 + in_f[v] + in_f0[v] - s[v] - s0[v];
    if (static_cast<int>(distinct.size()) < need) return false;
  }
  return true;
}

std::optional<EdgeSubset> modulo_factor_bounded(const Multigraph& g,
                                                const ResidueTarget& target,
                                                const VertexMap& lo,
                                                const VertexMap& hi,
                                                const EdgeSubset& include,
                                                const EdgeSubset& exclude) {
  const int n = g.num_vertices();
  check_subsets(g, include, exclude);
  check_size(lo, n, "lo");
  check_size(hi, n, "hi");
  check_size(target.residue, n, "residue");
  detail::DegreeSearch p{&g, include, exclude, {}, {}};
  p.allowed.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    if (lo[v] > hi[v]) {
      fail(ErrorKind::kInvalidInput, "lo exceeds hi at vertex " + std::to_string(v),
           {v});
    }
    p.allowed[v].assign(g.degree(v) + 1, 0);
    for (int d = std::max(0, lo[v]); d <= std::min(g.degree(v), hi[v]); ++d) {
      p.allowed[v][d] = floor_mod(d, target.k) == target.residue[v] ? 1 : 0;
    }
  }
  return detail::search_factor(p);
}

std::optional<EdgeSubset> exact_factor(const Multigraph& g,
                                       const FactorContract& contract) {
  contract.validate(g);
  const int n = g.num_vertices();
  const int num_edges = g.num_edges();
  detail::DegreeSearch p{&g, contract.include.value_or(EdgeSubset(num_edges)),
                         contract.exclude.value_or(EdgeSubset(num_edges)),
                         {}, {}};
  p.allowed.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    p.allowed[v].assign(g.degree(v) + 1, 0);
    for (int d = 0; d <= g.degree(v); ++d) {
      p.allowed[v][d] = contract.degree_allowed(v, d) ? 1 : 0;
    }
  }
  if (contract.m > 0 || contract.m0 > 0 || contract.bipartite) {
    p.accept = [&g, &contract](const EdgeSubset& h) {
      if (contract.bipartite && !is_bipartite(g, h)) return false;
      if (contract.m > 0 && !tree_packing(g, h, contract.m)) return false;
      if (contract.m0 > 0 && !tree_packing(g, h.complement(), contract.m0)) {
        return false;
      }
      return true;
    };
  }
  return detail::search_factor(p);
}

}  // namespace ff
