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

#ifndef FF_PIPELINES_HPP_
#define FF_PIPELINES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ff/error.hpp"
#include "ff/factor.hpp"
#include "ff/graph.hpp"
#include "ff/oriented.hpp"

namespace ff {

struct PipelineResult {
  std::string theorem;
  EdgeSubset factor;
  EdgeSubset complement;
  /// The per-vertex degree window the theorem claims for the factor.
  VertexMap lo;
  VertexMap hi;
  /// Every clause the theorem promises; the harness verifies against it.
  FactorContract contract;
  std::vector<std::string> notes;
};

struct ListRequest {
  int m = 0;
  int m0 = 0;
  ListFamily lists;
  /// Partition-connected variant: G is (m + m0, l0)-partition-connected.
  std::optional<VertexMap> l0;
  /// Directed variant: a pre-oriented excluded factor M0 with in-degree
  /// budget r (defaults to m - |M0| placed on z, else on vertex 0).
  std::vector<DirectedEdge> excluded_arcs;
  std::optional<VertexMap> r;
  std::optional<Vertex> z;
  /// Factor with maximum degree at most m that H must include (m0 = 0 only).
  std::optional<EdgeSubset> forced;
};

PipelineResult list_pipeline(const Multigraph& g, const ListRequest& request);

struct BoundedRequest {
  int m = 0;
  int m0 = 0;
  std::optional<Vertex> z;
  /// Exact degree wanted at z; must lie inside the window.
  std::optional<int> target_z;
  std::optional<EdgeSubset> forced;
  /// Variant with an excluded factor M0, |E(M0)| <= m (m0 = 0 only).
  std::optional<EdgeSubset> excluded;
  /// Partition-connected variant with demand l0 and shift s <= l0.
  std::optional<VertexMap> l0;
  std::optional<VertexMap> s;
};

PipelineResult bounded_pipeline(const Multigraph& g, const BoundedRequest& request);

struct ModuloRequest {
  ResidueTarget residue;
  int m = 0;
  int m0 = 0;
  std::optional<Vertex> z;
  std::optional<int> target_z;
  /// Bipartite only: partition-connected variant with demand l0.
  std::optional<VertexMap> l0;
  std::optional<VertexMap> s;
};

/// Parity factors; theorem id "mod2-main".
PipelineResult mod2_pipeline(const Multigraph& g, const ModuloRequest& request);

/// Connected even factor with floor(d/2) - 1 <= d_H <= ceil(d/2) + 2.
PipelineResult eulerian_bounded_pipeline(const Multigraph& g);

/// Connected factor with floor(d/4) <= d_H <= ceil((d-2)/4) + 2.
PipelineResult quarter_degree_pipeline(const Multigraph& g);

/// Bipartite G, compatible residues; theorem id "bip-modk-edge", or
/// "bip-modk" when m0 = 0.
PipelineResult bip_modk_pipeline(const Multigraph& g, const ModuloRequest& request);

/// General G, compatible residues, through the bipartite-index split.
PipelineResult gen_modk_pipeline(const Multigraph& g, const ModuloRequest& request);

struct ModRegularRequest {
  int k = 2;
  int m = 1;
  int m0 = 0;
  /// Defaults to the zero mapping.
  std::optional<ResidueTarget> residue;
  bool bipartite_required = false;
  std::optional<Vertex> z;
};

PipelineResult modregular_pipeline(const Multigraph& g,
                                   const ModRegularRequest& request);

/// Bipartite spanning Eulerian subgraph of a 4-tree-connected graph.
PipelineResult bip_eulerian_pipeline(const Multigraph& g);

/// k edge-disjoint non-bipartite spanning Eulerian subgraphs.
std::vector<EdgeSubset> nonbip_eulerian_pipeline(const Multigraph& g, int k);

}  // namespace ff

#endif  // FF_PIPELINES_HPP_
