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

#ifndef FF_FACTOR_HPP_
#define FF_FACTOR_HPP_

#include <map>
#include <optional>
#include <vector>

#include "ff/error.hpp"
#include "ff/graph.hpp"
#include "ff/oriented.hpp"

namespace ff {

/// Degree and structure constraints on a factor H. Absent fields are
/// unconstrained.
struct FactorContract {
  std::optional<EdgeSubset> include;
  std::optional<EdgeSubset> exclude;
  std::optional<VertexMap> lower;
  std::optional<VertexMap> upper;
  /// Allowed degrees per listed vertex.
  std::map<Vertex, std::vector<int>> lists;
  std::optional<ResidueTarget> residue;
  /// H must be m-tree-connected and its complement m0-tree-connected.
  int m = 0;
  int m0 = 0;
  /// H must be bipartite.
  bool bipartite = false;

  /// Throws invalid-input when the contract does not fit g.
  void validate(const Multigraph& g) const;
  /// Whether degree d at v passes the bound, list and residue clauses.
  bool degree_allowed(Vertex v, int d) const;
};

/// Disjoint A, B refuting the (generalized) Lovasz inequality.
struct LovaszWitness {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  int lhs = 0;  // sum_A d_F - d_F(A,B) + sum_B d_F0 - d_F0(A,B)
  int rhs = 0;  // sum_A f + sum_B (d_G - g) - d_G(A,B)

  int value() const { return rhs - lhs; }
};

struct SolverOptions {
  /// Refuse instances at the root when a Lovasz witness exists.
  bool lovasz_pruning = true;
  Limits limits;
};

/// Evaluates the inequality for all 3^n disjoint pairs. Returns the most
/// violated pair (smallest rhs - lhs; ties by |A + B|, then by the vertex
/// labelling). Requires g <= f with equality at most once (invalid-input
/// otherwise) and n within limits.lovasz_vertices (capacity otherwise).
std::optional<LovaszWitness> lovasz_check(const Multigraph& g,
                                          const VertexMap& lower,
                                          const VertexMap& upper,
                                          const EdgeSubset& include,
                                          const EdgeSubset& exclude,
                                          const Limits& limits = {});

/// Re-evaluates a pair from scratch.
LovaszWitness lovasz_evaluate(const Multigraph& g, const VertexMap& lower,
                              const VertexMap& upper, const EdgeSubset& include,
                              const EdgeSubset& exclude,
                              const std::vector<Vertex>& a,
                              const std::vector<Vertex>& b);

/// Exact (g,f)-factor with F inside and F0 outside.
std::optional<EdgeSubset> gf_factor(const Multigraph& g, const VertexMap& lower,
                                    const VertexMap& upper,
                                    const EdgeSubset& include,
                                    const EdgeSubset& exclude,
                                    const SolverOptions& options = {});

/// Checks g <= d+_G + d-_F - d+_F0 and d-_G + d+_F - d-_F0 <= f at every
/// vertex (precondition-unmet naming the first failing vertex), then solves.
/// nullopt here contradicts the existence guarantee.
std::optional<EdgeSubset> orientation_gf(const Multigraph& g,
                                         const VertexMap& lower,
                                         const VertexMap& upper,
                                         const EdgeSubset& include,
                                         const EdgeSubset& exclude,
                                         const Orientation& o,
                                         const SolverOptions& options = {});

using ListFamily = std::vector<std::vector<int>>;

/// Exact L-factor search. Lists must lie in [0, d_G(v)].
std::optional<EdgeSubset> directed_list_factor(const Multigraph& g,
                                               const Orientation& o,
                                               const ListFamily& lists);

/// |L(v)| >= d+(v) + 1 everywhere.
bool list_sizes_cover_out_degree(const Multigraph& g, const Orientation& o,
                                 const ListFamily& lists);

/// L-factor including F and excluding F0 by shifting the lists onto
/// G - E(F + F0). Lists must lie in [s(v), d_G(v) - s0(v)].
std::optional<EdgeSubset> list_factor_incl_excl(
    const Multigraph& g, const Orientation& o, const ListFamily& lists,
    const EdgeSubset& include, const EdgeSubset& exclude, const VertexMap& s,
    const VertexMap& s0);

/// |L(v)| >= d+_G + 1 + d-_F + d-_F0 - s - s0 everywhere.
bool list_sizes_cover_incl_excl(const Multigraph& g, const Orientation& o,
                                const ListFamily& lists,
                                const EdgeSubset& include,
                                const EdgeSubset& exclude, const VertexMap& s,
                                const VertexMap& s0);

/// Exact search for d_H = R (mod k) with lo <= d_H <= hi.
std::optional<EdgeSubset> modulo_factor_bounded(const Multigraph& g,
                                                const ResidueTarget& target,
                                                const VertexMap& lo,
                                                const VertexMap& hi,
                                                const EdgeSubset& include,
                                                const EdgeSubset& exclude);

/// Exact search over the whole contract, structure clauses included.
std::optional<EdgeSubset> exact_factor(const Multigraph& g,
                                       const FactorContract& contract);

}  // namespace ff

#endif  // FF_FACTOR_HPP_
