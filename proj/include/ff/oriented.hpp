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

#ifndef FF_ORIENTED_HPP_
#define FF_ORIENTED_HPP_

#include <vector>

#include "ff/graph.hpp"

namespace ff {

/// One edge with a chosen direction; `forward` means u -> v as listed.
struct DirectedEdge {
  EdgeId edge = 0;
  bool forward = true;
  bool operator==(const DirectedEdge&) const = default;
};

/// Tail/head assignment for every edge of a multigraph. A loop contributes
/// one to both the out-degree and the in-degree of its vertex.
class Orientation {
 public:
  Orientation() = default;
  /// Every edge oriented u -> v as listed.
  explicit Orientation(const Multigraph& g);
  Orientation(const Multigraph& g, std::vector<bool> forward);

  int num_edges() const { return static_cast<int>(forward_.size()); }
  int num_vertices() const { return static_cast<int>(out_.size()); }

  Vertex tail(EdgeId e) const { return forward_[e] ? ends_[e].u : ends_[e].v; }
  Vertex head(EdgeId e) const { return forward_[e] ? ends_[e].v : ends_[e].u; }
  bool forward(EdgeId e) const { return forward_[e]; }
  const std::vector<bool>& forward_flags() const { return forward_; }

  void set_forward(EdgeId e, bool forward);
  /// Orients e so that its tail is t; t must be an endpoint.
  void set_tail(EdgeId e, Vertex t);
  void reverse(EdgeId e) { set_forward(e, !forward_[e]); }
  Orientation reversed() const;

  int out_degree(Vertex v) const { return out_[v]; }
  int in_degree(Vertex v) const { return in_[v]; }
  int out_degree(Vertex v, const EdgeSubset& s) const;
  int in_degree(Vertex v, const EdgeSubset& s) const;
  std::vector<int> out_degrees(const EdgeSubset& s) const;
  std::vector<int> in_degrees(const EdgeSubset& s) const;

  bool operator==(const Orientation& o) const {
    return forward_ == o.forward_ && ends_ == o.ends_;
  }

 private:
  std::vector<Edge> ends_;
  std::vector<bool> forward_;
  std::vector<int> out_;
  std::vector<int> in_;
};

}  // namespace ff

#endif  // FF_ORIENTED_HPP_
