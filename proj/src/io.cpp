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

#include "ff/io.hpp"

#include <algorithm>
#include <fstream>

#include "ff/error.hpp"

namespace ff {
namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::kInvalidInput, what); }

void expect_format(const Json& j, const char* format) {
  if (!j.is_object()) bad(std::string("expected a JSON object in format ") + format);
  auto it = j.find("format");
  if (it == j.end() || !it->is_string() || *it != format) {
    bad(std::string("expected \"format\": \"") + format + "\"");
  }
}

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  const auto value = j.get<long long>();
  if (value < INT32_MIN || value > INT32_MAX) bad(what + " out of range");
  return static_cast<int>(value);
}

std::vector<int> int_array(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(as_int(x, what + " entry"));
  return out;
}

VertexMap vertex_map(const Multigraph& g, const Json& j, const std::string& what) {
  std::vector<int> values = int_array(j, what);
  if (static_cast<int>(values.size()) != g.num_vertices()) {
    bad(what + " has " + std::to_string(values.size()) + " entries for " +
        std::to_string(g.num_vertices()) + " vertices");
  }
  return values;
}

EdgeSubset edge_set(const Multigraph& g, const Json& j, const std::string& what) {
  EdgeSubset out(g.num_edges());
  for (int e : int_array(j, what)) {
    if (e < 0 || e >= g.num_edges()) bad(what + " names edge " + std::to_string(e));
    out.insert(e);
  }
  return out;
}

Json sorted_ids(const EdgeSubset& s) {
  std::vector<EdgeId> ids = s.ids();
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"format", "ffg-1"}, {"n", g.num_vertices()}, {"edges", edges}};
}

Multigraph graph_from_json(const Json& j) {
  expect_format(j, "ffg-1");
  if (!j.contains("n")) bad("graph lacks n");
  const int n = as_int(j["n"], "n");
  if (n < 0) bad("n must be non-negative");
  if (!j.contains("edges") || !j["edges"].is_array()) bad("graph lacks an edge array");
  std::vector<Edge> edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) bad("an edge must be a pair [u, v]");
    edges.push_back({as_int(e[0], "endpoint"), as_int(e[1], "endpoint")});
  }
  return Multigraph(n, std::move(edges));
}

Json orientation_to_json(const Orientation& o) {
  Json forward = Json::array();
  for (bool f : o.forward_flags()) forward.push_back(f);
  return {{"format", "ffo-1"}, {"forward", forward}};
}

Orientation orientation_from_json(const Multigraph& g, const Json& j) {
  expect_format(j, "ffo-1");
  if (!j.contains("forward") || !j["forward"].is_array()) bad("orientation lacks forward");
  std::vector<bool> forward;
  for (const Json& x : j["forward"]) {
    if (!x.is_boolean()) bad("forward entries must be booleans");
    forward.push_back(x.get<bool>());
  }
  if (static_cast<int>(forward.size()) != g.num_edges()) {
    bad("orientation length differs from edge count");
  }
  return Orientation(g, std::move(forward));
}

Json contract_to_json(const FactorContract& c) {
  Json j = {{"format", "ffc-1"}, {"m", c.m}, {"m0", c.m0}};
  if (c.include) j["include"] = sorted_ids(*c.include);
  if (c.exclude) j["exclude"] = sorted_ids(*c.exclude);
  if (c.lower) j["g"] = *c.lower;
  if (c.upper) j["f"] = *c.upper;
  if (!c.lists.empty()) {
    Json lists = Json::object();
    for (const auto& [v, list] : c.lists) {
      std::vector<int> sorted = list;
      std::sort(sorted.begin(), sorted.end());
      lists[std::to_string(v)] = sorted;
    }
    j["lists"] = lists;
  }
  if (c.residue) j["mod"] = {{"k", c.residue->k}, {"res", c.residue->residue}};
  if (c.bipartite) j["bipartite"] = true;
  return j;
}

FactorContract contract_from_json(const Multigraph& g, const Json& j) {
  expect_format(j, "ffc-1");
  FactorContract c;
  if (j.contains("include")) c.include = edge_set(g, j["include"], "include");
  if (j.contains("exclude")) c.exclude = edge_set(g, j["exclude"], "exclude");
  if (j.contains("g")) c.lower = vertex_map(g, j["g"], "g");
  if (j.contains("f")) c.upper = vertex_map(g, j["f"], "f");
  if (j.contains("lists")) {
    if (!j["lists"].is_object()) bad("lists must be an object keyed by vertex");
    for (const auto& [key, list] : j["lists"].items()) {
      int v = -1;
      try {
        size_t used = 0;
        v = std::stoi(key, &used);
        if (used != key.size()) v = -1;
      } catch (const std::exception&) {
        v = -1;
      }
      if (!g.valid_vertex(v)) bad("lists key " + key + " is not a vertex");
      c.lists[v] = int_array(list, "list");
    }
  }
  if (j.contains("mod")) {
    const Json& mod = j["mod"];
    if (!mod.is_object() || !mod.contains("k") || !mod.contains("res")) {
      bad("mod needs k and res");
    }
    const int k = as_int(mod["k"], "k");
    if (k < 1) bad("k must be positive");
    c.residue = ResidueTarget(k, vertex_map(g, mod["res"], "res"));
  }
  if (j.contains("m")) c.m = as_int(j["m"], "m");
  if (j.contains("m0")) c.m0 = as_int(j["m0"], "m0");
  if (j.contains("bipartite")) {
    if (!j["bipartite"].is_boolean()) bad("bipartite must be a boolean");
    c.bipartite = j["bipartite"].get<bool>();
  }
  c.validate(g);
  return c;
}

Json factor_to_json(const EdgeSubset& h) {
  return {{"format", "fff-1"}, {"edges", sorted_ids(h)}};
}

EdgeSubset factor_from_json(const Multigraph& g, const Json& j) {
  expect_format(j, "fff-1");
  if (!j.contains("edges")) bad("factor lacks edges");
  return edge_set(g, j["edges"], "edges");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) bad("write failed: " + path);
}

}  // namespace ff
