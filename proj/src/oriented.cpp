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

#include "ff/oriented.hpp"

#include "ff/error.hpp"

namespace ff {

Orientation::Orientation(const Multigraph& g)
    : Orientation(g, std::vector<bool>(g.num_edges(), true)) {}

Orientation::Orientation(const Multigraph& g, std::vector<bool> forward)
    : ends_(g.edges().begin(), g.edges().end()),
      forward_(std::move(forward)),
      out_(g.num_vertices(), 0),
      in_(g.num_vertices(), 0) {
  if (static_cast<int>(forward_.size()) != g.num_edges()) {
    fail(ErrorKind::kInvalidInput, "orientation length differs from edge count");
  }
  for (EdgeId e = 0; e < num_edges(); ++e) {
    ++out_[tail(e)];
    ++in_[head(e)];
  }
}

void Orientation::set_forward(EdgeId e, bool forward) {
  if (forward_[e] == forward) return;
  --out_[tail(e)];
  --in_[head(e)];
  forward_[e] = forward;
  ++out_[tail(e)];
  ++in_[head(e)];
}

void Orientation::set_tail(EdgeId e, Vertex t) {
  if (ends_[e].u == t) {
    set_forward(e, true);
  } else if (ends_[e].v == t) {
    set_forward(e, false);
  } else {
    fail(ErrorKind::kInvalidInput, "tail is not an endpoint of the edge");
  }
}

Orientation Orientation::reversed() const {
  Orientation r = *this;
  for (EdgeId e = 0; e < num_edges(); ++e) r.reverse(e);
  return r;
}

int Orientation::out_degree(Vertex v, const EdgeSubset& s) const {
  int d = 0;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (s.contains(e) && tail(e) == v) ++d;
  }
  return d;
}

int Orientation::in_degree(Vertex v, const EdgeSubset& s) const {
  int d = 0;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (s.contains(e) && head(e) == v) ++d;
  }
  return d;
}

std::vector<int> Orientation::out_degrees(const EdgeSubset& s) const {
  std::vector<int> d(num_vertices(), 0);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (s.contains(e)) ++d[tail(e)];
  }
  return d;
}

std::vector<int> Orientation::in_degrees(const EdgeSubset& s) const {
  std::vector<int> d(num_vertices(), 0);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    if (s.contains(e)) ++d[head(e)];
  }
  return d;
}

}  // namespace ff
