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

#include "search.hpp"

#include <map>

namespace ff::detail {

std::vector<std::vector<char>> all_degrees(const Multigraph& g) {
  std::vector<std::vector<char>> table(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) table[v].assign(g.degree(v) + 1, 1);
  return table;
}

namespace {

class Searcher {
 public:
  explicit Searcher(const DegreeSearch& p) : p_(p), g_(*p.graph) {
    const int n = g_.num_vertices();
    chosen_ = p_.include;
    cur_.assign(n, 0);
    rem_.assign(n, 0);
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      const Edge& ed = g_.edge(e);
      if (p_.include.contains(e)) {
        cur_[ed.u] += 1;
        cur_[ed.v] += 1;
      } else if (!p_.exclude.contains(e)) {
        rem_[ed.u] += 1;
        rem_[ed.v] += 1;
        active_.push_back(e);
      }
    }
    // next_[v][d]: least allowed degree >= d, or a sentinel past the end.
    next_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      const int size = static_cast<int>(p_.allowed[v].size());
      next_[v].assign(size + 1, 1 << 29);
      for (int d = size - 1; d >= 0; --d) {
        next_[v][d] = p_.allowed[v][d] ? d : next_[v][d + 1];
      }
    }
    // Previous active edge with the same endpoints, for symmetry breaking.
    std::map<std::pair<Vertex, Vertex>, int> last;
    prev_parallel_.assign(active_.size(), -1);
    for (int i = 0; i < static_cast<int>(active_.size()); ++i) {
      const Edge& ed = g_.edge(active_[i]);
      const auto key = std::minmax(ed.u, ed.v);
      auto it = last.find(key);
      if (it != last.end()) prev_parallel_[i] = it->second;
      last[key] = i;
    }
    taken_.assign(active_.size(), false);
  }

  std::optional<EdgeSubset> run() {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (!viable(v)) return std::nullopt;
    }
    if (dfs(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool viable(Vertex v) const {
    const int lo = cur_[v];
    if (lo >= static_cast<int>(next_[v].size()) - 1) return false;
    return next_[v][lo] <= lo + rem_[v];
  }

  bool dfs(int i) {
    if (i == static_cast<int>(active_.size())) {
      return !p_.accept || p_.accept(chosen_);
    }
    const EdgeId e = active_[i];
    const Edge& ed = g_.edge(e);
    rem_[ed.u] -= 1;
    rem_[ed.v] -= 1;
    // Leaving the edge out comes first, so forced edges alone are tried
    // before anything larger.
    if (viable(ed.u) && viable(ed.v) && dfs(i + 1)) return true;
    const bool may_take = prev_parallel_[i] < 0 || taken_[prev_parallel_[i]];
    if (may_take) {
      cur_[ed.u] += 1;
      cur_[ed.v] += 1;
      taken_[i] = true;
      chosen_.insert(e);
      if (viable(ed.u) && viable(ed.v) && dfs(i + 1)) return true;
      chosen_.erase(e);
      taken_[i] = false;
      cur_[ed.u] -= 1;
      cur_[ed.v] -= 1;
    }
    rem_[ed.u] += 1;
    rem_[ed.v] += 1;
    return false;
  }

  const DegreeSearch& p_;
  const Multigraph& g_;
  EdgeSubset chosen_;
  std::vector<int> cur_;
  std::vector<int> rem_;
  std::vector<EdgeId> active_;
  std::vector<std::vector<int>> next_;
  std::vector<int> prev_parallel_;
  std::vector<bool> taken_;
};

}  // namespace

std::optional<EdgeSubset> search_factor(const DegreeSearch& problem) {
  return Searcher(problem).run();
}

}  // namespace ff::detail
