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

#include "matroidkit/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_set>
#include <utility>

#include "matroidkit/error.hpp"

namespace matroidkit {

struct Matroid::Cache {
  std::once_flag circuits_once;
  std::vector<GroundSubset> circuits;
  std::once_flag flats_once;
  std::vector<std::vector<GroundSubset>> flats;
};

namespace {

void sort_unique(std::vector<GroundSubset>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Drops every set that strictly contains another member.
std::vector<GroundSubset> minimal_members(std::vector<GroundSubset> sets) {
  std::stable_sort(sets.begin(), sets.end(),
                   [](GroundSubset a, GroundSubset b) { return a.size() < b.size(); });
  std::vector<GroundSubset> kept;
  for (GroundSubset s : sets) {
    bool minimal = std::none_of(kept.begin(), kept.end(), [&](GroundSubset k) {
      return k.is_subset_of(s);
    });
    if (minimal) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<GroundSubset> compute_circuits(const Matroid& m) {
  const GroundSubset ground = m.ground();
  std::unordered_set<GroundSubset, GroundSubsetHash> found;
  for (GroundSubset b : m.bases()) {
    (ground - b).for_each([&](int e) {
      GroundSubset c = GroundSubset::singleton(e);
      b.for_each([&](int x) {
        if (m.is_basis(b.without(x).with(e))) c = c.with(x);
      });
      found.insert(c);
    });
  }
  return minimal_members({found.begin(), found.end()});
}

std::vector<std::vector<GroundSubset>> compute_flats(const Matroid& m) {
  const GroundSubset ground = m.ground();
  std::vector<std::vector<GroundSubset>> levels;
  levels.push_back({closure(m, GroundSubset{})});
  for (int k = 0; k < m.rank(); ++k) {
    std::unordered_set<GroundSubset, GroundSubsetHash> next;
    for (GroundSubset f : levels.back()) {
      (ground - f).for_each([&](int x) { next.insert(closure(m, f.with(x))); });
    }
    std::vector<GroundSubset> level(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace

Matroid::Matroid(std::size_t n, std::vector<GroundSubset> bases,
                 std::optional<Labels> labels)
    : n_(n), rank_(0), bases_(std::move(bases)), labels_(std::move(labels)),
      cache_(std::make_shared<Cache>()) {
  if (n_ > kMaxGroundSize) {
    throw Error("ground set of size " + std::to_string(n_) +
                " exceeds the supported maximum of " +
                std::to_string(kMaxGroundSize));
  }
  if (bases_.empty()) throw Error("a matroid needs at least one basis");
  if (labels_ && labels_->size() != n_) {
    throw Error("expected " + std::to_string(n_) + " labels, got " +
                std::to_string(labels_->size()));
  }
  const GroundSubset ground = GroundSubset::full(n_);
  sort_unique(bases_);
  rank_ = bases_.front().size();
  for (GroundSubset b : bases_) {
    if (!b.is_subset_of(ground)) {
      throw Error("basis element out of range for ground set of size " +
                  std::to_string(n_));
    }
    if (b.size() != rank_) throw Error("bases have unequal cardinalities");
  }
}

bool Matroid::is_basis(GroundSubset s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

std::string Matroid::label(int i) const {
  return labels_ ? (*labels_)[static_cast<std::size_t>(i)] : std::to_string(i);
}

Matroid Matroid::with_labels(std::optional<Labels> labels) const {
  return Matroid(n_, bases_, std::move(labels));
}

const std::vector<GroundSubset>& Matroid::circuits() const {
  std::call_once(cache_->circuits_once,
                 [this] { cache_->circuits = compute_circuits(*this); });
  return cache_->circuits;
}

const std::vector<std::vector<GroundSubset>>& Matroid::flats() const {
  std::call_once(cache_->flats_once,
                 [this] { cache_->flats = compute_flats(*this); });
  return cache_->flats;
}

Matroid make_matroid(std::size_t n, std::optional<Labels> labels,
                     const std::vector<std::vector<int>>& bases) {
  if (n > kMaxGroundSize) {
    throw Error("ground set of size " + std::to_string(n) +
                " exceeds the supported maximum of " +
                std::to_string(kMaxGroundSize));
  }
  std::vector<GroundSubset> sets;
  sets.reserve(bases.size());
  for (const auto& basis : bases) {
    GroundSubset s;
    for (int e : basis) {
      if (e < 0 || static_cast<std::size_t>(e) >= n) {
        throw Error("index " + std::to_string(e) + " out of range [0, " +
                    std::to_string(n) + ")");
      }
      s = s.with(e);
    }
    sets.push_back(s);
  }
  return Matroid(n, std::move(sets), std::move(labels));
}

bool is_valid(const Matroid& m) {
  if (m.basis_count() == 0) return false;
  for (GroundSubset b1 : m.bases()) {
    for (GroundSubset b2 : m.bases()) {
      const GroundSubset only_in_b2 = b2 - b1;
      bool ok = true;
      (b1 - b2).for_each([&](int x) {
        if (!ok) return;
        bool exchanged = false;
        only_in_b2.for_each([&](int y) {
          if (!exchanged && m.is_basis(b1.without(x).with(y))) exchanged = true;
        });
        ok = exchanged;
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool operator==(const Matroid& a, const Matroid& b) {
  return a.size() == b.size() && std::ranges::equal(a.bases(), b.bases());
}

int rank_of(const Matroid& m, GroundSubset s) {
  const int cap = std::min(s.size(), m.rank());
  int best = 0;
  for (GroundSubset b : m.bases()) {
    best = std::max(best, (b & s).size());
    if (best == cap) break;
  }
  return best;
}

GroundSubset closure(const Matroid& m, GroundSubset s) {
  // x outside s raises the rank iff x lies in some basis meeting s maximally.
  const int r = rank_of(m, s);
  GroundSubset spanning;
  for (GroundSubset b : m.bases()) {
    if ((b & s).size() == r) spanning |= b;
  }
  return m.ground() - (spanning - s);
}

bool is_dependent(const Matroid& m, GroundSubset s) {
  return rank_of(m, s) < s.size();
}

bool is_independent(const Matroid& m, GroundSubset s) { return !is_dependent(m, s); }

bool is_flat(const Matroid& m, GroundSubset s) { return closure(m, s) == s; }

std::vector<GroundSubset> independents(const Matroid& m, int k) {
  std::vector<GroundSubset> out;
  if (k < 0 || k > m.rank()) return out;
  std::unordered_set<GroundSubset, GroundSubsetHash> seen;
  for (GroundSubset b : m.bases()) {
    for_each_k_subset_of(b, k, [&](GroundSubset s) {
      if (seen.insert(s).second) out.push_back(s);
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroundSubset> circuits(const Matroid& m) { return m.circuits(); }

GroundSubset loops(const Matroid& m) {
  GroundSubset used;
  for (GroundSubset b : m.bases()) used |= b;
  return m.ground() - used;
}

GroundSubset coloops(const Matroid& m) {
  GroundSubset common = m.ground();
  for (GroundSubset b : m.bases()) common &= b;
  return common;
}

std::vector<std::vector<GroundSubset>> flats(const Matroid& m) { return m.flats(); }

std::vector<std::size_t> fvector(const Matroid& m) {
  std::vector<std::size_t> out;
  for (const auto& level : m.flats()) out.push_back(level.size());
  return out;
}

std::vector<GroundSubset> hyperplanes(const Matroid& m) {
  std::vector<GroundSubset> complements;
  complements.reserve(m.basis_count());
  for (GroundSubset b : m.bases()) complements.push_back(b.complement(m.size()));
  const Matroid dual(m.size(), std::move(complements));
  std::vector<GroundSubset> out;
  for (GroundSubset c : dual.circuits()) out.push_back(c.complement(m.size()));
  std::sort(out.begin(), out.end());
  return out;
}

Labels labels_of(const Matroid& m, std::span<const int> indices) {
  if (!m.labels()) throw Error("matroid has no ground-set labels");
  Labels out;
  out.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= m.size()) {
      throw Error("index " + std::to_string(i) + " out of range");
    }
    out.push_back((*m.labels())[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<int> indices_of(const Matroid& m, std::span<const std::string> labels) {
  if (!m.labels()) throw Error("matroid has no ground-set labels");
  const Labels& all = *m.labels();
  std::vector<int> out;
  out.reserve(labels.size());
  for (const std::string& l : labels) {
    auto it = std::find(all.begin(), all.end(), l);
    if (it == all.end()) throw Error("unknown label '" + l + "'");
    out.push_back(static_cast<int>(it - all.begin()));
  }
  return out;
}

}  // namespace matroidkit
