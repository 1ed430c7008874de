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

// Depth-first search for factors whose degrees lie in per-vertex allowed
// sets, with an optional whole-factor predicate checked at the leaves.

#ifndef FF_SRC_SEARCH_HPP_
#define FF_SRC_SEARCH_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "ff/graph.hpp"

namespace ff::detail {

struct DegreeSearch {
  const Multigraph* graph = nullptr;
  EdgeSubset include;
  EdgeSubset exclude;
  /// allowed[v][d] for d in 0..degree(v).
  std::vector<std::vector<char>> allowed;
  /// Must be invariant under swapping parallel edges.
  std::function<bool(const EdgeSubset&)> accept;
};

/// Every table entry true.
std::vector<std::vector<char>> all_degrees(const Multigraph& g);

/// First factor found, or nullopt when none exists (exhaustive).
std::optional<EdgeSubset> search_factor(const DegreeSearch& problem);

}  // namespace ff::detail

#endif  // FF_SRC_SEARCH_HPP_
