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

#include "matroidkit/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "matroidkit/error.hpp"
#include "matroidkit/transform.hpp"

namespace matroidkit {

namespace {

void check_ground_size(std::size_t n) {
  if (n > kMaxGroundSize) {
    throw Error("ground set of size " + std::to_string(n) +
                " exceeds the supported maximum of " +
                std::to_string(kMaxGroundSize));
  }
}

// Enumerates circuit-free r-subsets in increasing-element order. A circuit
// can only become contained when its largest element is added, so only those
// circuits are tested at each step.
class IndependentSetSearch {
 public:
  IndependentSetSearch(std::size_t n, const std::vector<GroundSubset>& circuits)
      : n_(static_cast<int>(n)), closing_(n) {
    for (GroundSubset c : circuits) closing_[c.max()].push_back(c);
  }

  bool admits(GroundSubset current, int e) const {
    const GroundSubset next = current.with(e);
    return std::none_of(closing_[e].begin(), closing_[e].end(),
                        [&](GroundSubset c) { return c.is_subset_of(next); });
  }

  // Circuit test against every circuit, for sets not built in order.
  bool independent(GroundSubset s) const {
    for (const auto& group : closing_) {
      for (GroundSubset c : group) {
        if (c.is_subset_of(s)) return false;
      }
    }
    return true;
  }

  std::vector<GroundSubset> all_of_size(int r) {
    target_ = r;
    found_.clear();
    descend(0, GroundSubset{});
    return std::move(found_);
  }

 private:
  void descend(int start, GroundSubset current) {
    const int missing = target_ - current.size();
    if (missing == 0) {
      found_.push_back(current);
      return;
    }
    for (int e = start; e <= n_ - missing; ++e) {
      if (admits(current, e)) descend(e + 1, current.with(e));
    }
  }

  int n_;
  std::vector<std::vector<GroundSubset>> closing_;
  int target_ = 0;
  std::vector<GroundSubset> found_;
};

}  // namespace

Matroid uniform_matroid(int r, std::size_t n) {
  check_ground_size(n);
  if (r < 0 || static_cast<std::size_t>(r) > n) {
    throw Error("uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) +
                ", n=" + std::to_string(n));
  }
  std::vector<GroundSubset> bases;
  for_each_k_subset(n, r, [&](GroundSubset s) {
    bases.push_back(s);
    return true;
  });
  return Matroid(n, std::move(bases));
}

Matroid linear_matroid(const ExactMatrix& a) {
  check_ground_size(a.cols());
  const int r = static_cast<int>(a.rank());
  std::vector<GroundSubset> bases;
  for_each_k_subset(a.cols(), r, [&](GroundSubset s) {
    if (a.column_rank(s) == static_cast<std::size_t>(r)) bases.push_back(s);
    return true;
  });
  Labels labels;
  for (std::size_t c = 0; c < a.cols(); ++c) labels.push_back(a.column_label(c));
  return Matroid(a.cols(), std::move(bases), std::move(labels));
}

Matroid graphic_matroid(const Graph& g) {
  std::vector<GroundSubset> circuits;
  for (const Cycle& c : get_cycles(g)) circuits.push_back(c.edges);
  const int r = static_cast<int>(g.vertex_count() - g.component_count());
  Labels labels;
  for (auto [u, w] : g.edges()) {
    labels.push_back("{" + std::to_string(u) + "," + std::to_string(w) + "}");
  }
  return matroid_from_circuits(g.edge_count(), circuits, r).with_labels(std::move(labels));
}

Matroid matroid_from_circuits(std::size_t n,
                              const std::vector<GroundSubset>& circuits,
                              std::optional<int> target_rank) {
  check_ground_size(n);
  const GroundSubset ground = GroundSubset::full(n);
  std::vector<GroundSubset> sorted = circuits;
  for (GroundSubset c : sorted) {
    if (c.empty()) throw Error("the empty set cannot be a circuit");
    if (!c.is_subset_of(ground)) throw Error("circuit element out of range");
  }
  // Keep only inclusion-minimal circuits.
  std::sort(sorted.begin(), sorted.end(),
            [](GroundSubset a, GroundSubset b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::vector<GroundSubset> minimal;
  for (GroundSubset c : sorted) {
    if (std::none_of(minimal.begin(), minimal.end(),
                     [&](GroundSubset k) { return k.is_subset_of(c); })) {
      minimal.push_back(c);
    }
  }

  IndependentSetSearch search(n, minimal);
  GroundSubset grown;
  for (int e = 0; e < static_cast<int>(n); ++e) {
    if (search.independent(grown.with(e))) grown = grown.with(e);
  }
  const int r = grown.size();
  if (target_rank && *target_rank != r) {
    throw Error("target rank " + std::to_string(*target_rank) +
                " disagrees with the rank " + std::to_string(r) +
                " forced by the circuits");
  }
  std::vector<GroundSubset> bases = search.all_of_size(r);
  return Matroid(n, std::move(bases));
}

Matroid matroid_from_nonbases(std::size_t n,
                              const std::vector<GroundSubset>& nonbases, int r) {
  check_ground_size(n);
  if (r < 0 || static_cast<std::size_t>(r) > n) {
    throw Error("rank " + std::to_string(r) + " out of range for ground size " +
                std::to_string(n));
  }
  std::unordered_set<GroundSubset, GroundSubsetHash> excluded;
  for (GroundSubset s : nonbases) {
    if (s.size() != r) {
      throw Error("nonbasis of size " + std::to_string(s.size()) +
                  " in a rank-" + std::to_string(r) + " matroid");
    }
    if (!s.is_subset_of(GroundSubset::full(n))) {
      throw Error("nonbasis element out of range");
    }
    excluded.insert(s);
  }
  std::vector<GroundSubset> bases;
  for_each_k_subset(n, r, [&](GroundSubset s) {
    if (!excluded.contains(s)) bases.push_back(s);
    return true;
  });
  if (bases.empty()) throw Error("every r-subset is a nonbasis; no bases remain");
  return Matroid(n, std::move(bases));
}

Matroid specific_matroid(std::string_view name) {
  if (name == "fano") {
    const std::vector<GroundSubset> lines = {{0, 1, 2}, {0, 4, 5}, {0, 3, 6},
                                             {1, 3, 5}, {1, 4, 6}, {2, 3, 4},
                                             {2, 5, 6}};
    return matroid_from_nonbases(7, lines, 3);
  }
  if (name == "vamos") {
    const GroundSubset p1{0, 1}, p2{2, 3}, p3{4, 5}, p4{6, 7};
    return matroid_from_nonbases(
        8, {p1 | p2, p1 | p3, p1 | p4, p2 | p3, p2 | p4}, 4);
  }
  throw Error("unknown named matroid '" + std::string(name) +
              "' (expected fano or vamos)");
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const std::size_t shift = a.size();
  check_ground_size(shift + b.size());
  std::vector<GroundSubset> bases;
  bases.reserve(a.basis_count() * b.basis_count());
  for (GroundSubset x : a.bases()) {
    for (GroundSubset y : b.bases()) {
      bases.push_back(x | GroundSubset(shift == 64 ? 0 : y.bits() << shift));
    }
  }
  Labels labels;
  for (std::size_t i = 0; i < a.size(); ++i) {
    labels.push_back("(" + a.label(static_cast<int>(i)) + ", 0)");
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    labels.push_back("(" + b.label(static_cast<int>(i)) + ", 1)");
  }
  return Matroid(shift + b.size(), std::move(bases), std::move(labels));
}

std::vector<GroundSubset> component_parts(const Matroid& m) {
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (GroundSubset c : m.circuits()) {
    const int root = find(c.min());
    c.for_each([&](int e) { parent[find(e)] = root; });
  }
  std::vector<GroundSubset> parts;
  std::vector<int> part_of_root(m.size(), -1);
  for (int e = 0; e < static_cast<int>(m.size()); ++e) {
    const int root = find(e);
    if (part_of_root[root] < 0) {
      part_of_root[root] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[part_of_root[root]] = parts[part_of_root[root]].with(e);
  }
  return parts;
}

std::vector<Matroid> components(const Matroid& m) {
  std::vector<Matroid> out;
  for (GroundSubset part : component_parts(m)) out.push_back(restriction(m, part));
  return out;
}

}  // namespace matroidkit
