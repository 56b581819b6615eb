// Copyright 2026 The Authors.
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

#ifndef MATROIDKIT_GRAPH_HPP
#define MATROIDKIT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroidkit/ground_subset.hpp"

namespace matroidkit {

using Edge = std::pair<int, int>;

/// A simple undirected graph. Edges are stored as (min, max) pairs in the
/// order they were first given; that order is the ground-set order of the
/// graphic matroid.
class Graph {
 public:
  Graph() = default;
  /// Throws Error on out-of-range endpoints or self-loops. Repeated edges
  /// (in either orientation) keep their first position.
  Graph(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbours of v in increasing order.
  const std::vector<int>& neighbors(int v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  /// Index of edge {u, w}, or -1.
  int edge_index(int u, int w) const;
  std::size_t component_count() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<std::uint64_t, int> edge_lookup_;
};

Graph graph_from_edges(std::size_t vertex_count, const std::vector<Edge>& edges);
Graph complete_graph(std::size_t n);
/// GP(n, k): outer cycle, then spokes, then the inner star polygon.
Graph generalized_petersen(std::size_t n, std::size_t k);

/// A simple cycle. `vertices` starts at the cycle's smallest vertex and
/// continues towards the smaller of its two neighbours on the cycle.
struct Cycle {
  GroundSubset edges;
  std::vector<int> vertices;

  bool operator==(const Cycle&) const = default;
};

/// Closed walks of exactly `length` edges that start and end at `anchor`,
/// never repeat a vertex, and only visit vertices larger than `anchor`.
/// Each walk is returned as its vertex sequence without the closing repeat
/// of the anchor; every such cycle appears once per orientation.
std::vector<std::vector<int>> closed_walks(const Graph& g, int anchor,
                                           std::size_t length);

/// Every simple cycle of g exactly once, ordered by length and then by
/// vertex sequence. Throws Error if g has more than kMaxGroundSize edges.
std::vector<Cycle> get_cycles(const Graph& g);

}  // namespace matroidkit

#endif  // MATROIDKIT_GRAPH_HPP
