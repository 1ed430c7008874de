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

#ifndef FF_COMPAT_HPP_
#define FF_COMPAT_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ff/error.hpp"
#include "ff/graph.hpp"

namespace ff {

struct CompatibilityVerdict {
  bool compatible = true;
  /// A bipartition admitting no slack; set only when incompatible.
  std::optional<Bipartition> witness;
  /// For a single bipartition: 'x' or 'y' names the side whose inside edges
  /// absorb the slack, 0 when not applicable.
  char side = 0;
  int slack = 0;
  /// "modulus-one", "bipartite-unique", "low-bi-index", "enumeration" or
  /// "bipartition" for compatible_wrt.
  std::string method;
};

CompatibilityVerdict compatible_wrt(const Multigraph& g, const ResidueTarget& r,
                                    const Bipartition& p);

struct CompatibilityOptions {
  /// Use the bipartite and low-bi-index shortcuts when they apply.
  bool shortcuts = true;
  /// Bipartition offered to the low-bi-index shortcut.
  std::optional<Bipartition> hint;
  Limits limits;
};

/// Throws kCapacity when enumeration is needed past the bipartition cap.
CompatibilityVerdict compatible(const Multigraph& g, const ResidueTarget& r,
                                const CompatibilityOptions& options = {});

/// Visits every bipartition with vertex 0 in X, X = V included; stops when
/// `visit` returns false. Throws kCapacity past limits.bipartition_vertices.
void for_each_bipartition(int n, const Limits& limits,
                          const std::function<bool(const Bipartition&)>& visit);

/// Edges of s with both ends on one side, loops included.
EdgeSubset inside_edges(const Multigraph& g, const EdgeSubset& s,
                        const Bipartition& p);

int bipartite_index(const Multigraph& g, const Limits& limits = {});

/// A maximum cut, first in enumeration order.
Bipartition max_cut(const Multigraph& g, const Limits& limits = {});

/// A bipartition X, Y with (within)[X, Y] m-tree-connected, trying
/// bipartitions by decreasing cut size.
std::optional<Bipartition> tree_connected_bipartition(const Multigraph& g,
                                                      const EdgeSubset& within,
                                                      int m,
                                                      const Limits& limits = {});

/// The edges J of a forest with d_J(v) odd exactly at the marked vertices.
/// Throws kInvalidInput when some tree holds an odd number of marks.
EdgeSubset parity_join(const Multigraph& g, const EdgeSubset& forest,
                       const std::vector<bool>& odd);

enum class ParitySide { kNone, kFirst, kSecond };

struct BiIndexSplit {
  EdgeSubset g1;
  EdgeSubset g2;
  Bipartition partition;
  /// e_{G2}(X) + e_{G2}(Y).
  int inside = 0;
  /// min(k0, bi(G)).
  int target = 0;
  /// True when inside == target is guaranteed, false for the weaker
  /// parity variant that only promises inside >= target.
  bool exact = true;
};

BiIndexSplit decompose_by_bi_index(const Multigraph& g, int m1, int m2, int k0,
                                   ParitySide parity = ParitySide::kNone,
                                   const Limits& limits = {});

}  // namespace ff

#endif  // FF_COMPAT_HPP_
