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

#include "ff/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>

#include "ff/error.hpp"

namespace ff {
namespace {

constexpr int kMaxVertices = 64;
constexpr int kRegularAttempts = 10000;

int to_int(const std::string& key, const std::string& text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    fail(ErrorKind::kInvalidInput, "parameter " + key + " is not an integer: " + text);
  }
  return value;
}

int get(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) fail(ErrorKind::kInvalidInput, "missing parameter " + key);
  return to_int(key, it->second);
}

int get(const Params& p, const std::string& key, int fallback) {
  return p.count(key) ? get(p, key) : fallback;
}

void check_range(const std::string& key, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    fail(ErrorKind::kInvalidInput, "parameter " + key + " = " + std::to_string(value) +
                                       " outside [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
  }
}

Multigraph complete(const Params& p) {
  const int n = get(p, "n");
  const int times = get(p, "times", 1);
  check_range("n", n, 0, kMaxVertices);
  check_range("times", times, 1, 1000);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (int t = 0; t < times; ++t) edges.push_back({u, v});
    }
  }
  return Multigraph(n, std::move(edges));
}

Multigraph complete_bipartite(const Params& p) {
  const int a = get(p, "a");
  const int b = get(p, "b");
  check_range("a", a, 0, kMaxVertices);
  check_range("b", b, 0, kMaxVertices - a);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  return Multigraph(a + b, std::move(edges));
}

Multigraph circulant(const Params& p) {
  const int n = get(p, "n");
  check_range("n", n, 1, kMaxVertices);
  auto it = p.find("offsets");
  if (it == p.end()) fail(ErrorKind::kInvalidInput, "missing parameter offsets");
  std::set<int> offsets;
  std::string text = it->second;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t plus = std::min(text.find('+', start), text.size());
    const int o = to_int("offsets", text.substr(start, plus - start));
    check_range("offset", o, 1, n / 2);
    offsets.insert(o);
    start = plus + 1;
  }
  std::vector<Edge> edges;
  for (int o : offsets) {
    // An offset of n/2 pairs antipodes once.
    const int count = 2 * o == n ? n / 2 : n;
    for (Vertex i = 0; i < count; ++i) edges.push_back({i, (i + o) % n});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph dipole(const Params& p) {
  const int width = get(p, "width", get(p, "n", -1));
  check_range("width", width, 0, 100000);
  return Multigraph(2, std::vector<Edge>(width, Edge{0, 1}));
}

Multigraph random_regular(const Params& p, std::uint64_t seed) {
  const int n = get(p, "n");
  const int r = get(p, "r");
  const bool simple = get(p, "simple", 0) != 0;
  check_range("n", n, 1, kMaxVertices);
  check_range("r", r, 0, simple ? n - 1 : 1000);
  if ((n * r) % 2 != 0) fail(ErrorKind::kInvalidInput, "n * r must be even");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), r, v);
  for (int attempt = 0; attempt < kRegularAttempts; ++attempt) {
    shuffle(points, rng);
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    bool ok = true;
    for (size_t i = 0; i + 1 < points.size() && ok; i += 2) {
      const Vertex u = std::min(points[i], points[i + 1]);
      const Vertex v = std::max(points[i], points[i + 1]);
      if (u == v) ok = false;
      if (simple && !seen.insert({u, v}).second) ok = false;
      edges.push_back({u, v});
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return Multigraph(n, std::move(edges));
  }
  fail(ErrorKind::kInvalidInput, "no loopless pairing found for these parameters");
}

Multigraph hamilton_union(const Params& p, std::uint64_t seed) {
  const int n = get(p, "n");
  const int cycles = get(p, "cycles", 2);
  check_range("n", n, 3, kMaxVertices);
  check_range("cycles", cycles, 1, 1000);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<Vertex> order(n);
  for (int c = 0; c < cycles; ++c) {
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    shuffle(order, rng);
    for (int i = 0; i < n; ++i) {
      const Vertex a = order[i];
      const Vertex b = order[(i + 1) % n];
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  return Multigraph(n, std::move(edges));
}

Multigraph multiplied(const Params& p, std::uint64_t seed) {
  auto it = p.find("base");
  if (it == p.end()) fail(ErrorKind::kInvalidInput, "missing parameter base");
  if (it->second == "multiplied") {
    fail(ErrorKind::kInvalidInput, "multiplied cannot wrap itself");
  }
  const int times = get(p, "times");
  check_range("times", times, 1, 1000);
  Params rest = p;
  rest.erase("base");
  rest.erase("times");
  const Multigraph base = generate(it->second, rest, seed);
  std::vector<Edge> edges;
  for (const Edge& e : base.edges()) edges.insert(edges.end(), times, e);
  return Multigraph(base.num_vertices(), std::move(edges));
}

}  // namespace

Params parse_params(const std::string& text) {
  Params out;
  size_t start = 0;
  while (start < text.size()) {
    const size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    const size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      fail(ErrorKind::kInvalidInput, "expected key=value, got '" + item + "'");
    }
    out[item.substr(0, eq)] = item.substr(eq + 1);
    start = comma + 1;
  }
  return out;
}

std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ',';
    out += k + '=' + v;
  }
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::kInvalidInput, "empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Multigraph generate(const std::string& family, const Params& params,
                    std::uint64_t seed) {
  if (family == "complete") return complete(params);
  if (family == "complete-bipartite") return complete_bipartite(params);
  if (family == "circulant") return circulant(params);
  if (family == "dipole") return dipole(params);
  if (family == "multiplied") return multiplied(params, seed);
  if (family == "random-regular-multigraph") return random_regular(params, seed);
  if (family == "union-of-hamilton-cycles") return hamilton_union(params, seed);
  fail(ErrorKind::kInvalidInput, "unknown family " + family);
}

std::vector<std::string> family_names() {
  return {"complete",   "complete-bipartite", "circulant", "dipole", "multiplied",
          "random-regular-multigraph", "union-of-hamilton-cycles"};
}

}  // namespace ff
