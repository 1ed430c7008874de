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

// Matroid partitioning by shortest augmenting paths in the exchange graph.
// Used for spanning-tree packing (graphic matroids) and for splitting a graph
// into trees plus an out-degree demand part (graphic + transversal).

#ifndef FF_SRC_MATROID_HPP_
#define FF_SRC_MATROID_HPP_

#include <span>
#include <vector>

#include "ff/graph.hpp"

namespace ff::detail {

class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual bool allows(EdgeId x) const = 0;
  virtual bool contains(EdgeId x) const = 0;
  /// For x outside the set: sets *free when set + x is independent, otherwise
  /// appends every y with set - y + x independent to *swaps.
  virtual void exchanges(EdgeId x, bool* free, std::vector<EdgeId>* swaps) = 0;
  virtual void erase(EdgeId y) = 0;
  virtual void insert(EdgeId x) = 0;
  virtual std::vector<EdgeId> members() const = 0;
};

/// Forests of a multigraph; loops and disallowed edges are never independent.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(const Multigraph& g, EdgeSubset allowed);

  bool allows(EdgeId x) const override { return allowed_.contains(x); }
  bool contains(EdgeId x) const override { return members_.contains(x); }
  void exchanges(EdgeId x, bool* free, std::vector<EdgeId>* swaps) override;
  void erase(EdgeId y) override;
  void insert(EdgeId x) override;
  std::vector<EdgeId> members() const override { return members_.ids(); }

 private:
  void rebuild();

  const Multigraph& g_;
  EdgeSubset allowed_;
  EdgeSubset members_;
  bool dirty_ = true;
  std::vector<std::vector<EdgeId>> adj_;
};

/// Edge sets that can be charged to endpoints without exceeding capacity(v)
/// edges per vertex. A loop may be charged to its vertex once.
class DemandMatroid final : public Matroid {
 public:
  DemandMatroid(const Multigraph& g, VertexMap capacity, EdgeSubset allowed);

  bool allows(EdgeId x) const override { return allowed_.contains(x); }
  bool contains(EdgeId x) const override { return owner_[x] >= 0; }
  void exchanges(EdgeId x, bool* free, std::vector<EdgeId>* swaps) override;
  void erase(EdgeId y) override;
  void insert(EdgeId x) override;
  std::vector<EdgeId> members() const override;

  /// Endpoint that e is charged to, or -1.
  Vertex owner(EdgeId e) const { return owner_[e]; }

 private:
  const Multigraph& g_;
  VertexMap capacity_;
  EdgeSubset allowed_;
  std::vector<Vertex> owner_;
  std::vector<int> load_;
};

/// Tries to place each element of `order` (in order) into one of the
/// matroids, re-shuffling placed elements along shortest exchange paths.
/// Elements already placed stay placed. Returns the number newly placed.
int grow_partition(std::span<Matroid* const> matroids,
                   std::span<const EdgeId> order, int num_elements);

}  // namespace ff::detail

#endif  // FF_SRC_MATROID_HPP_
