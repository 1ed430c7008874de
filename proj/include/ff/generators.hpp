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

#ifndef FF_GENERATORS_HPP_
#define FF_GENERATORS_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ff/graph.hpp"

namespace ff {

using Params = std::map<std::string, std::string>;

/// Parses "k=v,k=v"; throws invalid-input on malformed pairs.
Params parse_params(const std::string& text);
std::string format_params(const Params& params);

/// Families: complete (n, times), complete-bipartite (a, b), circulant
/// (n, offsets "1+2"), dipole (width), multiplied (base, times, plus the base's
/// own parameters), random-regular-multigraph (n, r, simple), and
/// union-of-hamilton-cycles (n, cycles). Deterministic in (family, params, seed).
Multigraph generate(const std::string& family, const Params& params,
                    std::uint64_t seed);

std::vector<std::string> family_names();

/// Platform-independent uniform draw from [0, bound).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

}  // namespace ff

#endif  // FF_GENERATORS_HPP_
