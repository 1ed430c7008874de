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

#ifndef FF_VERIFY_HPP_
#define FF_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ff/error.hpp"
#include "ff/factor.hpp"
#include "ff/graph.hpp"

namespace ff {

struct Verdict {
  bool pass = true;
  /// One line per failed clause.
  std::vector<std::string> failures;
};

/// Rechecks every clause of `c` on H from the graph alone.
Verdict verify(const Multigraph& g, const EdgeSubset& h, const FactorContract& c);

/// First subset in increasing bitmask order satisfying `c`, or nullopt.
/// Throws kCapacity past limits.brute_force_edges edges.
std::optional<EdgeSubset> brute_force_search(const Multigraph& g,
                                             const FactorContract& c,
                                             const Limits& limits = {});

}  // namespace ff

#endif  // FF_VERIFY_HPP_
