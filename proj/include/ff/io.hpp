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

#ifndef FF_IO_HPP_
#define FF_IO_HPP_

#include <string>

#include <json.hpp>

#include "ff/factor.hpp"
#include "ff/graph.hpp"
#include "ff/oriented.hpp"

namespace ff {

using Json = nlohmann::json;

// Formats: ffg-1 graphs, ffo-1 orientations, ffc-1 contracts, fff-1 factors.
// Readers throw invalid-input on anything malformed.

Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

Json orientation_to_json(const Orientation& o);
Orientation orientation_from_json(const Multigraph& g, const Json& j);

Json contract_to_json(const FactorContract& c);
FactorContract contract_from_json(const Multigraph& g, const Json& j);

Json factor_to_json(const EdgeSubset& h);
EdgeSubset factor_from_json(const Multigraph& g, const Json& j);

Json read_json_file(const std::string& path);
/// Two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace ff

#endif  // FF_IO_HPP_
