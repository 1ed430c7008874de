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

#ifndef FF_CONNECTIVITY_HPP_
#define FF_CONNECTIVITY_HPP_

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "ff/error.hpp"
#include "ff/graph.hpp"
#include "ff/oriented.hpp"

namespace ff {

/// Returned by edge_connectivity and max_packing for single-vertex graphs.
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// Minimum over nonempty proper A of d_G(A); 0 when disconnected.
int edge_connectivity(const Multigraph& g);

/// m pairwise edge-disjoint spanning trees of a host graph.
struct TreePacking {
  std::vector<EdgeSubset> trees;

  EdgeSubset union_edges(int num_edges) const;
};

/// Exact: NONE means no m edge-disjoint spanning trees exist.
std::optional<TreePacking> tree_packing(const Multigraph& g, int m);
/// Same, using only the edges in `within`.
std::optional<TreePacking> tree_packing(const Multigraph& g,
                                        const EdgeSubset& within, int m);

/// Largest m with an m-tree packing; kUnbounded when n <= 1.
int max_packing(const Multigraph& g);

/// True when the packing has m disjoint spanning trees of g.
bool is_tree_packing(const Multigraph& g, const TreePacking& p, int m);

/// Partition of V as a block label per vertex (labels 0..blocks-1).
struct VertexPartition {
  std::vector<int> block_of;
  int num_blocks = 0;

  std::vector<std::vector<Vertex>> blocks() const;
};

/// Calls visit for every partition of {0..n-1} in restricted-growth-string
/// order until it returns false.
void for_each_partition(int n,
                        const std::function<bool(const VertexPartition&)>& visit);

/// e_G(P): edges joining different blocks plus loops at singleton blocks.
int partition_crossing(const Multigraph& g, const VertexPartition& p);

/// m(|P|-1) + sum of l(v) over singleton blocks {v}.
int partition_requirement(const VertexPartition& p, int m, const VertexMap& l);

struct PartitionWitness {
  VertexPartition partition;
  int observed = 0;
  int required = 0;
};

/// nullopt when G is (m,l)-partition-connected, else the most violated
/// partition (smallest observed - required; earliest in enumeration order on
/// ties). Throws capacity above limits.partition_vertices.
std::optional<PartitionWitness> partition_connectivity_check(
    const Multigraph& g, int m, const VertexMap& l, const Limits& limits = {});

/// An m-tree-connected factor H plus an orientation of the whole graph whose
/// restriction to E(G) \ E(H) has out-degree at least l everywhere.
struct PartitionSplit {
  EdgeSubset h;
  TreePacking trees;
  Orientation orientation;
};

/// Throws precondition-unmet when G is not (m,l)-partition-connected, M has a
/// loop, or Delta(M) > m. M ends up inside H.
PartitionSplit decompose_partition_connected(const Multigraph& g, int m,
                                             const VertexMap& l,
                                             const EdgeSubset& forced);

/// Joint form: H is m-tree-connected and contains `forced`, a disjoint
/// factor H0 is m0-tree-connected, and the rest is oriented with out-degree
/// at least l. Only edges of `usable` are used for H, H0 and the demand;
/// remaining usable edges go to the oriented rest. Exact (nullopt means no
/// such split exists).
struct JointSplit {
  EdgeSubset h;
  EdgeSubset h0;
  TreePacking trees;
  TreePacking trees0;
  Orientation orientation;
};
std::optional<JointSplit> split_trees_and_demand(const Multigraph& g,
                                                 const EdgeSubset& usable,
                                                 int m, int m0,
                                                 const VertexMap& l,
                                                 const EdgeSubset& forced);

}  // namespace ff

#endif  // FF_CONNECTIVITY_HPP_
