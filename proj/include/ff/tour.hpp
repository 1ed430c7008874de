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

#ifndef FF_TOUR_HPP_
#define FF_TOUR_HPP_

#include <vector>

#include "ff/graph.hpp"
#include "ff/oriented.hpp"

namespace ff {

/// A directed graph balanced by added arcs, an Eulerian tour of it, and the
/// factors H_0, ..., H_t built along the tour. Arc ids below num_original
/// are edges of the input graph; the rest are the added arcs M.
struct TourState {
  int num_original = 0;
  std::vector<Vertex> tail;
  std::vector<Vertex> head;
  /// e_1, ..., e_t as arc ids.
  std::vector<int> tour;
  /// W_v: marked incoming added arcs, in tour order.
  std::vector<std::vector<int>> marked_in;
  /// The successors in the tour of the arcs in marked_in.
  std::vector<std::vector<int>> marked_next;
  /// added[i-1]: whether step i put e_i into H.
  std::vector<bool> added;

  int num_arcs() const { return static_cast<int>(tail.size()); }
  bool is_added_arc(int arc) const { return arc >= num_original; }
  /// H_i as a subset of the original edges.
  EdgeSubset factor_after(int i) const;
  EdgeSubset factor() const { return factor_after(static_cast<int>(tour.size())); }
};

/// Adds arcs from in-surplus to out-surplus vertices (smallest ids paired
/// first) so every vertex ends up with d+ = d-. Tour fields stay empty.
TourState balance_augment(const Multigraph& g, const Orientation& o);

/// Runs the whole construction: balance, Eulerian tour from the lowest-id
/// edge of F (of F0 when F is empty), then the step rules. Throws
/// precondition-unmet when the input violates the hypotheses and
/// contract-violation if the resulting H misses its degree bounds.
TourState tour_construction(const Multigraph& g, const Orientation& o,
                            const EdgeSubset& include, const EdgeSubset& exclude,
                            const VertexMap& s, const VertexMap& s0);

/// H including F, excluding F0, with
/// d+_G - d+_F0 - s0 <= d_H <= d-_G + d+_F + s at every vertex.
EdgeSubset tour_factor(const Multigraph& g, const Orientation& o,
                       const EdgeSubset& include, const EdgeSubset& exclude,
                       const VertexMap& s, const VertexMap& s0);

}  // namespace ff

#endif  // FF_TOUR_HPP_
