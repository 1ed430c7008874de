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

#ifndef FF_GRAPH_HPP_
#define FF_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ff {

using Vertex = int;
using EdgeId = int;

/// Total map V -> Z. Used for degree bounds, demands and integer residues.
using VertexMap = std::vector<int>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  bool is_loop() const { return u == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph on vertices 0..n-1. Edge ids are positions in the
/// edge list. Loops and parallel edges are allowed; a loop adds 2 to the
/// degree of its vertex.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  int degree(Vertex v) const { return degree_[v]; }
  const std::vector<int>& degrees() const { return degree_; }
  int max_degree() const;
  int num_loops() const;

  /// Edge ids incident with v; a loop is listed once.
  std::span<const EdgeId> incident(Vertex v) const { return incident_[v]; }

  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }
  bool operator==(const Multigraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// A spanning subgraph of a host multigraph, given by edge ids.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(int universe) : mask_(universe, 0) {}
  EdgeSubset(int universe, std::span<const EdgeId> ids);
  EdgeSubset(int universe, std::initializer_list<EdgeId> ids)
      : EdgeSubset(universe, std::span<const EdgeId>(ids.begin(), ids.size())) {}

  static EdgeSubset all(int universe);

  int universe() const { return static_cast<int>(mask_.size()); }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(EdgeId e) const { return mask_[e] != 0; }
  void insert(EdgeId e);
  void erase(EdgeId e);
  std::vector<EdgeId> ids() const;

  EdgeSubset complement() const;
  bool is_subset_of(const EdgeSubset& o) const;
  bool disjoint_from(const EdgeSubset& o) const;

  EdgeSubset& operator|=(const EdgeSubset& o);
  EdgeSubset& operator&=(const EdgeSubset& o);
  EdgeSubset& operator-=(const EdgeSubset& o);
  friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset& b) { return a |= b; }
  friend EdgeSubset operator&(EdgeSubset a, const EdgeSubset& b) { return a &= b; }
  friend EdgeSubset operator-(EdgeSubset a, const EdgeSubset& b) { return a -= b; }
  bool operator==(const EdgeSubset& o) const { return mask_ == o.mask_; }

 private:
  std::vector<char> mask_;
  int count_ = 0;
};

/// Two-sided vertex partition; either side may be empty.
struct Bipartition {
  std::vector<bool> in_x;

  static Bipartition from_x(int n, std::span<const Vertex> x);
  std::vector<Vertex> x() const;
  std::vector<Vertex> y() const;
  bool operator==(const Bipartition&) const = default;
};

/// Residue map V -> Z_k with every value reduced into [0, k).
struct ResidueTarget {
  int k = 1;
  std::vector<int> residue;

  ResidueTarget() = default;
  ResidueTarget(int modulus, std::vector<int> values);
  static ResidueTarget constant(int n, int modulus, int value);
};

inline int floor_mod(long long a, int k) {
  long long r = a % k;
  return static_cast<int>(r < 0 ? r + k : r);
}
inline int half_floor(int d) { return d / 2; }
inline int half_ceil(int d) { return (d + 1) / 2; }

struct CutCounts {
  int boundary = 0;  // edges with exactly one end in A
  int inside = 0;    // edges with both ends in A, loops included
  bool operator==(const CutCounts&) const = default;
};

CutCounts cut_counts(const Multigraph& g, std::span<const Vertex> a);

/// Induced subgraph with dense relabelling. vertex_map[i] and edge_map[j] give
/// the host vertex / edge of sub-vertex i / sub-edge j.
struct InducedSubgraph {
  Multigraph graph;
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;
};

InducedSubgraph induced(const Multigraph& g, std::span<const Vertex> a);

/// Edges of g with one end in X and the other in Y.
EdgeSubset bipartite_factor(const Multigraph& g, const Bipartition& p);

/// The spanning subgraph (V, S) as a standalone multigraph. edge_map[j] is
/// the host id of sub-edge j; sub-edges keep host id order.
struct SpanningSubgraph {
  Multigraph graph;
  std::vector<EdgeId> edge_map;

  /// Maps an edge subset of `graph` back to host ids.
  EdgeSubset lift(const EdgeSubset& sub, int host_edges) const;
  /// Restricts a host edge subset to `graph` ids.
  EdgeSubset restrict(const EdgeSubset& host) const;
};

SpanningSubgraph spanning_subgraph(const Multigraph& g, const EdgeSubset& s);

/// d_S(v) for every vertex.
std::vector<int> degrees_in(const Multigraph& g, const EdgeSubset& s);

/// Number of edges of S with one end in A and the other in B (A, B disjoint
/// masks).
int edges_between(const Multigraph& g, const EdgeSubset& s,
                  const std::vector<bool>& a, const std::vector<bool>& b);

bool is_connected(const Multigraph& g, const EdgeSubset& s);
bool is_connected(const Multigraph& g);

/// Proper 2-colouring when g is bipartite (loops make a graph non-bipartite).
bool is_bipartite(const Multigraph& g, const EdgeSubset& s,
                  Bipartition* colouring = nullptr);
bool is_bipartite(const Multigraph& g, Bipartition* colouring = nullptr);

std::vector<bool> vertex_mask(int n, std::span<const Vertex> a);

}  // namespace ff

#endif  // FF_GRAPH_HPP_
