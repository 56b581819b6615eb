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

#include "matroidkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <set>

#include "matroidkit/parallel.hpp"
#include "matroidkit/transform.hpp"

namespace matroidkit {

namespace {

// Isomorphism invariants of a matroid, computed once per matroid.
struct Profile {
  explicit Profile(const Matroid& m) : m(m), n(m.size()) {
    degree.assign(n, 0);
    pair_degree.assign(n * n, 0);
    for (GroundSubset b : m.bases()) {
      b.for_each([&](int i) {
        ++degree[i];
        b.for_each([&](int j) { ++pair_degree[i * n + j]; });
      });
    }
    signature.resize(n);
    for (std::size_t i = 0; i < n; ++i) signature[i].push_back(degree[i]);
    for (GroundSubset c : m.circuits()) {
      circuit_sizes.push_back(c.size());
      c.for_each([&](int e) { signature[e].push_back(c.size()); });
    }
    std::sort(circuit_sizes.begin(), circuit_sizes.end());
    for (auto& s : signature) std::sort(s.begin() + 1, s.end());
    sorted_signatures = signature;
    std::sort(sorted_signatures.begin(), sorted_signatures.end());
  }

  const Matroid& m;
  std::size_t n;
  std::vector<int> degree;
  std::vector<int> pair_degree;
  // Basis degree followed by the sorted sizes of circuits through the element.
  std::vector<std::vector<int>> signature;
  std::vector<std::vector<int>> sorted_signatures;
  std::vector<int> circuit_sizes;
};

bool coarse_match(const Matroid& a, const Matroid& b) {
  return a.size() == b.size() && a.rank() == b.rank() &&
         a.basis_count() == b.basis_count();
}

class IsoSearch {
 public:
  IsoSearch(const Profile& src, const Profile& dst) : src_(src), dst_(dst) {
    order_.resize(src.n);
    std::iota(order_.begin(), order_.end(), 0);
    // Most constrained elements first: those whose signature class is smallest.
    std::vector<int> class_size(src.n, 0);
    for (std::size_t i = 0; i < src.n; ++i) {
      class_size[i] = static_cast<int>(std::count(src.signature.begin(),
                                                  src.signature.end(),
                                                  src.signature[i]));
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return class_size[a] < class_size[b]; });
    perm_.assign(src.n, -1);
    used_.assign(src.n, 0);
  }

  std::optional<std::vector<int>> run() {
    if (assign(0)) return perm_;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t depth) {
    if (depth == order_.size()) return verifies(src_.m, dst_.m, perm_);
    const int i = order_[depth];
    for (int j = 0; j < static_cast<int>(dst_.n); ++j) {
      if (used_[j] || src_.signature[i] != dst_.signature[j]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const int k = order_[d];
        consistent = src_.pair_degree[i * src_.n + k] ==
                     dst_.pair_degree[j * dst_.n + perm_[k]];
      }
      if (!consistent) continue;
      perm_[i] = j;
      used_[j] = 1;
      if (assign(depth + 1)) return true;
      used_[j] = 0;
      perm_[i] = -1;
    }
    return false;
  }

  const Profile& src_;
  const Profile& dst_;
  std::vector<int> order_;
  std::vector<int> perm_;
  std::vector<char> used_;
};

std::optional<IsoWitness> isomorphism_with(const Profile& src, const Profile& dst) {
  if (!coarse_match(src.m, dst.m)) return std::nullopt;
  if (src.m == dst.m) {
    IsoWitness w;
    w.perm.resize(src.n);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.equal = true;
    return w;
  }
  if (src.circuit_sizes != dst.circuit_sizes ||
      src.sorted_signatures != dst.sorted_signatures) {
    return std::nullopt;
  }
  IsoSearch search(src, dst);
  if (auto perm = search.run()) return IsoWitness{std::move(*perm), false};
  return std::nullopt;
}

std::vector<std::uint64_t> basis_key(const Matroid& m) {
  std::vector<std::uint64_t> key;
  key.reserve(m.basis_count());
  for (GroundSubset b : m.bases()) key.push_back(b.bits());
  return key;
}

// First witness for one fixed contract set, scanning delete sets in order.
std::optional<MinorWitness> search_deletions(const Matroid& m, GroundSubset contract,
                                             const Matroid& target,
                                             const Profile& target_profile) {
  const Matroid contracted = contraction(m, contract);
  const GroundSubset remaining = contract.complement(m.size());
  const int delete_count =
      static_cast<int>(contracted.size()) - static_cast<int>(target.size());
  const int target_loops = loops(target).size();
  const int target_coloops = coloops(target).size();

  std::set<std::vector<std::uint64_t>> rejected;
  std::optional<MinorWitness> found;
  for_each_k_subset(contracted.size(), delete_count, [&](GroundSubset removed) {
    // Coindependent: what is left still spans the contraction.
    const GroundSubset kept = removed.complement(contracted.size());
    if (rank_of(contracted, kept) != contracted.rank()) return true;
    const Matroid candidate = deletion(contracted, removed);
    if (!coarse_match(candidate, target) || loops(candidate).size() != target_loops ||
        coloops(candidate).size() != target_coloops) {
      return true;
    }
    auto key = basis_key(candidate);
    if (rejected.contains(key)) return true;
    const Profile profile(candidate);
    if (auto iso = isomorphism_with(profile, target_profile)) {
      found = MinorWitness{contract, expand(removed, remaining), std::move(*iso)};
      return false;
    }
    rejected.insert(std::move(key));
    return true;
  });
  return found;
}

}  // namespace

bool verifies(const Matroid& source, const Matroid& target,
              const std::vector<int>& perm) {
  if (source.size() != target.size() || perm.size() != source.size() ||
      source.basis_count() != target.basis_count()) {
    return false;
  }
  std::vector<char> hit(target.size(), 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= target.size() || hit[p]) return false;
    hit[p] = 1;
  }
  for (GroundSubset b : source.bases()) {
    GroundSubset image;
    b.for_each([&](int e) { image = image.with(perm[e]); });
    if (!target.is_basis(image)) return false;
  }
  return true;
}

std::optional<IsoWitness> isomorphism(const Matroid& source, const Matroid& target) {
  if (!coarse_match(source, target)) return std::nullopt;
  const Profile src(source);
  const Profile dst(target);
  return isomorphism_with(src, dst);
}

std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n) {
  if (n.rank() > m.rank() || n.size() > m.size()) return std::nullopt;
  const int contract_count = m.rank() - n.rank();
  if (static_cast<std::size_t>(contract_count) + n.size() > m.size()) return std::nullopt;

  const Profile target_profile(n);
  const std::vector<GroundSubset> contract_sets = independents(m, contract_count);
  std::vector<std::optional<MinorWitness>> results(contract_sets.size());
  std::atomic<std::size_t> best{contract_sets.size()};
  parallel_for(contract_sets.size(), [&](std::size_t i) {
    if (i > best.load()) return;
    results[i] = search_deletions(m, contract_sets[i], n, target_profile);
    if (results[i]) {
      std::size_t current = best.load();
      while (i < current && !best.compare_exchange_weak(current, i)) {
      }
    }
  });
  if (best.load() == contract_sets.size()) return std::nullopt;
  return results[best.load()];
}

}  // namespace matroidkit
