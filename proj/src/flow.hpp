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

// Dinic maximum flow on small integer networks.

#ifndef FF_SRC_FLOW_HPP_
#define FF_SRC_FLOW_HPP_

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

namespace ff::detail {

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(nodes), level_(nodes), it_(nodes) {}

  /// Returns the arc index; flow(arc) reads the pushed amount.
  int add_arc(int from, int to, int capacity) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
    return static_cast<int>(arcs_.size()) - 2;
  }

  int flow(int arc) const { return arcs_[arc ^ 1].cap; }

  long long max_flow(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  /// Nodes reachable from s in the residual network (valid after max_flow).
  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int id : adj_[a]) {
        if (arcs_[id].cap > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = true;
          queue.push_back(arcs_[id].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int id : adj_[a]) {
        if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
          level_[arcs_[id].to] = level_[a] + 1;
          queue.push_back(arcs_[id].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int dfs(int a, int t, int limit) {
    if (a == t) return limit;
    for (int& i = it_[a]; i < static_cast<int>(adj_[a].size()); ++i) {
      const int id = adj_[a][i];
      Arc& arc = arcs_[id];
      if (arc.cap <= 0 || level_[arc.to] != level_[a] + 1) continue;
      if (int pushed = dfs(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= pushed;
        arcs_[id ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> it_;
};

}  // namespace ff::detail

#endif  // FF_SRC_FLOW_HPP_
