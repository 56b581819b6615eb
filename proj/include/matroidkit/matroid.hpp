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

#ifndef MATROIDKIT_MATROID_HPP
#define MATROIDKIT_MATROID_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matroidkit/ground_subset.hpp"

namespace matroidkit {

using Labels = std::vector<std::string>;

/// A matroid on {0, ..., n-1} presented by its list of bases.
///
/// Bases are kept sorted (increasing mask order) and deduplicated. The
/// constructor checks only that the family is nonempty, equicardinal and in
/// range; the exchange axiom is checked separately by is_valid(). Query
/// results on a family that fails is_valid() are unspecified.
///
/// Values are immutable. Circuits and flats are memoized on first use; the
/// memo is shared between copies and filled at most once, so concurrent
/// readers are safe.
class Matroid {
 public:
  /// Throws Error on an empty family, out-of-range elements, bases of unequal
  /// size, a label list of the wrong length, or n > kMaxGroundSize.
  Matroid(std::size_t n, std::vector<GroundSubset> bases,
          std::optional<Labels> labels = std::nullopt);

  std::size_t size() const { return n_; }
  int rank() const { return rank_; }
  GroundSubset ground() const { return GroundSubset::full(n_); }
  std::span<const GroundSubset> bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }
  bool is_basis(GroundSubset s) const;

  const std::optional<Labels>& labels() const { return labels_; }
  /// Label of element i, or its decimal index when unlabeled.
  std::string label(int i) const;
  Matroid with_labels(std::optional<Labels> labels) const;

  /// All circuits, sorted. Memoized.
  const std::vector<GroundSubset>& circuits() const;
  /// flats()[k] holds the rank-k flats, sorted. Memoized.
  const std::vector<std::vector<GroundSubset>>& flats() const;

 private:
  struct Cache;

  std::size_t n_;
  int rank_;
  std::vector<GroundSubset> bases_;
  std::optional<Labels> labels_;
  std::shared_ptr<Cache> cache_;
};

/// Builds a matroid from index lists. Validity is not checked.
Matroid make_matroid(std::size_t n, std::optional<Labels> labels,
                     const std::vector<std::vector<int>>& bases);

/// Checks nonemptiness and the basis exchange axiom.
bool is_valid(const Matroid& m);

/// Same ground-set size and the same set of bases; labels are ignored.
bool operator==(const Matroid& a, const Matroid& b);

int rank_of(const Matroid& m, GroundSubset s);
GroundSubset closure(const Matroid& m, GroundSubset s);
bool is_dependent(const Matroid& m, GroundSubset s);
bool is_independent(const Matroid& m, GroundSubset s);
bool is_flat(const Matroid& m, GroundSubset s);

/// All independent sets of size k, sorted.
std::vector<GroundSubset> independents(const Matroid& m, int k);

/// Minimal dependent sets, from fundamental circuits of every
/// (basis, outside element) pair.
std::vector<GroundSubset> circuits(const Matroid& m);

/// Elements contained in no basis.
GroundSubset loops(const Matroid& m);
/// Elements contained in every basis.
GroundSubset coloops(const Matroid& m);

/// Flats grouped by rank 0..rank(m), each group sorted.
std::vector<std::vector<GroundSubset>> flats(const Matroid& m);
std::vector<std::size_t> fvector(const Matroid& m);

/// Flats of rank rank(m) - 1, obtained as complements of the circuits of the
/// dual matroid.
std::vector<GroundSubset> hyperplanes(const Matroid& m);

/// Translates indices to labels; throws on unlabeled matroids or bad indices.
Labels labels_of(const Matroid& m, std::span<const int> indices);
/// Translates labels back to indices; throws on unknown labels.
std::vector<int> indices_of(const Matroid& m, std::span<const std::string> labels);

}  // namespace matroidkit

#endif  // MATROIDKIT_MATROID_HPP
