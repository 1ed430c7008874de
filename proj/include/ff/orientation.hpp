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

#ifndef FF_ORIENTATION_HPP_
#define FF_ORIENTATION_HPP_

#include <optional>
#include <span>

#include "ff/connectivity.hpp"
#include "ff/graph.hpp"
#include "ff/oriented.hpp"

namespace ff {

/// Balanced orientation (d+ = d- everywhere) of a graph with even degrees.
/// Throws precondition-unmet naming an odd vertex otherwise.
Orientation eulerian_orientation(const Multigraph& g);

/// Orientation with in-degree at least l(v) everywhere. When none exists,
/// throws precondition-unmet whose witness is a vertex set A with
/// sum_{A} l > number of edges touching A.
Orientation demand_orientation(const Multigraph& g, const VertexMap& l);

struct BasicDecomposition {
  EdgeSubset h;
  TreePacking trees;
  /// l(v) = floor(d/2) - m (ceil at z), clamped at zero.
  VertexMap demand;
  /// Edges outside H and M0 meet out-degree >= demand; H and M0 edges are
  /// left as listed.
  Orientation orientation;
};

/// m-tree-connected H with M inside and M0 outside whose leftover part
/// G - E(H + M0) is (0,l)-partition-connected. Requires G 2m-edge-connected,
/// M and M0 loopless and disjoint, Delta(M) <= m and |M0| <= m.
BasicDecomposition basic_decomposition(const Multigraph& g, int m,
                                       const EdgeSubset& forced,
                                       const EdgeSubset& excluded,
                                       std::optional<Vertex> z = std::nullopt);

struct PreorientationExtension {
  EdgeSubset f;
  TreePacking trees;
  /// The factor M0' with in-degree r picked before decomposing.
  EdgeSubset extra;
  Orientation orientation;
};

/// Extends the given orientation of M0 to all of G so that d+(v) <=
/// ceil(d(v)/2) (floor at z) and d-_F(v) = m - r(v) - d-_{M0}(v), with F
/// m-tree-connected, M inside F, M0 outside. Requires sum r = m - |M0|.
PreorientationExtension extend_preorientation(
    const Multigraph& g, int m, const EdgeSubset& forced,
    std::span<const DirectedEdge> preoriented, const VertexMap& r,
    std::optional<Vertex> z = std::nullopt);

}  // namespace ff

#endif  // FF_ORIENTATION_HPP_
