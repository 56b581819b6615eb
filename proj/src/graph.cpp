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

#include "matroidkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matroidkit/error.hpp"
#include "matroidkit/parallel.hpp"

namespace matroidkit {

namespace {

std::uint64_t edge_key(int u, int w) {
  if (u > w) std::swap(u, w);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(w);
}

// Vertices >= anchor that survive repeated removal of degree <= 1 vertices
// in the subgraph induced on {anchor, anchor+1, ...}.
std::vector<char> cyclic_core(const Graph& g, int anchor) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<char> alive(g.vertex_count(), 0);
  std::vector<int> degree(g.vertex_count(), 0);
  std::vector<int> queue;
  for (int v = anchor; v < n; ++v) {
    alive[v] = 1;
    for (int u : g.neighbors(v)) degree[v] += u >= anchor;
  }
  for (int v = anchor; v < n; ++v) {
    if (degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (int u : g.neighbors(v)) {
      if (u >= anchor && alive[u] && --degree[u] <= 1) queue.push_back(u);
    }
  }
  return alive;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int anchor, std::vector<char> allowed)
      : g_(g), anchor_(anchor), allowed_(std::move(allowed)),
        on_path_(g.vertex_count(), 0) {}

  // Both orientations when `canonical_only` is false.
  void run(std::size_t exact_length, bool canonical_only) {
    exact_length_ = exact_length;
    canonical_only_ = canonical_only;
    path_.assign(1, anchor_);
    on_path_[anchor_] = 1;
    extend();
    on_path_[anchor_] = 0;
  }

  std::vector<std::vector<int>> walks;

 private:
  void extend() {
    const int tail = path_.back();
    const bool length_ok = exact_length_ == 0 || path_.size() == exact_length_;
    if (path_.size() >= 3 && length_ok && g_.edge_index(tail, anchor_) >= 0 &&
        (!canonical_only_ || path_[1] < tail)) {
      walks.push_back(path_);
    }
    if (exact_length_ != 0 && path_.size() >= exact_length_) return;
    for (int u : g_.neighbors(tail)) {
      if (u <= anchor_ || !allowed_[u] || on_path_[u]) continue;
      path_.push_back(u);
      on_path_[u] = 1;
      extend();
      on_path_[u] = 0;
      path_.pop_back();
    }
  }

  const Graph& g_;
  int anchor_;
  std::vector<char> allowed_;
  std::vector<char> on_path_;
  std::vector<int> path_;
  std::size_t exact_length_ = 0;
  bool canonical_only_ = true;
};

}  // namespace

Graph::Graph(std::size_t vertex_count, const std::vector<Edge>& edges)
    : vertex_count_(vertex_count), adjacency_(vertex_count) {
  for (auto [u, w] : edges) {
    if (u < 0 || w < 0 || static_cast<std::size_t>(u) >= vertex_count ||
        static_cast<std::size_t>(w) >= vertex_count) {
      throw Error("edge {" + std::to_string(u) + ", " + std::to_string(w) +
                  "} has an endpoint outside [0, " +
                  std::to_string(vertex_count) + ")");
    }
    if (u == w) throw Error("self-loop at vertex " + std::to_string(u));
    const auto [it, inserted] =
        edge_lookup_.emplace(edge_key(u, w), static_cast<int>(edges_.size()));
    if (!inserted) continue;
    edges_.emplace_back(std::min(u, w), std::max(u, w));
    adjacency_[u].push_back(w);
    adjacency_[w].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::edge_index(int u, int w) const {
  auto it = edge_lookup_.find(edge_key(u, w));
  return it == edge_lookup_.end() ? -1 : it->second;
}

std::size_t Graph::component_count() const {
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertex_count_;
  for (auto [u, w] : edges_) {
    const int a = find(u), b = find(w);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

Graph graph_from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
  return Graph(vertex_count, edges);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int u = 0; u < static_cast<int>(n); ++u) {
    for (int w = u + 1; w < static_cast<int>(n); ++w) edges.emplace_back(u, w);
  }
  return Graph(n, edges);
}

Graph generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3) throw Error("generalized Petersen graph needs n >= 3");
  if (k < 1 || k >= n || 2 * k == n) {
    throw Error("generalized Petersen graph needs 1 <= k < n and 2k != n");
  }
  const int m = static_cast<int>(n);
  const int step = static_cast<int>(k);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  for (int i = 0; i < m; ++i) edges.emplace_back(i, m + i);
  for (int i = 0; i < m; ++i) edges.emplace_back(m + i, m + (i + step) % m);
  return Graph(2 * n, edges);
}

std::vector<std::vector<int>> closed_walks(const Graph& g, int anchor,
                                           std::size_t length) {
  if (anchor < 0 || static_cast<std::size_t>(anchor) >= g.vertex_count()) {
    throw Error("vertex " + std::to_string(anchor) + " out of range");
  }
  if (length < 3) return {};
  CycleSearch search(g, anchor, std::vector<char>(g.vertex_count(), 1));
  search.run(length, /*canonical_only=*/false);
  return std::move(search.walks);
}

std::vector<Cycle> get_cycles(const Graph& g) {
  if (g.edge_count() > kMaxGroundSize) {
    throw Error("cycle enumeration supports at most " +
                std::to_string(kMaxGroundSize) + " edges");
  }
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::vector<int>>> per_anchor(n);
  parallel_for(n, [&](std::size_t v) {
    const int anchor = static_cast<int>(v);
    std::vector<char> core = cyclic_core(g, anchor);
    if (!core[v]) return;
    CycleSearch search(g, anchor, std::move(core));
    search.run(0, /*canonical_only=*/true);
    per_anchor[v] = std::move(search.walks);
  });

  std::vector<Cycle> cycles;
  for (auto& walks : per_anchor) {
    for (auto& walk : walks) {
      Cycle c;
      for (std::size_t i = 0; i < walk.size(); ++i) {
        const int next = walk[(i + 1) % walk.size()];
        c.edges = c.edges.with(g.edge_index(walk[i], next));
      }
      c.vertices = std::move(walk);
      cycles.push_back(std::move(c));
    }
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.vertices.size() != b.vertices.size()) {
      return a.vertices.size() < b.vertices.size();
    }
    return a.vertices < b.vertices;
  });
  return cycles;
}

}  // namespace matroidkit
