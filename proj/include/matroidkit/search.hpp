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

#ifndef MATROIDKIT_SEARCH_HPP
#define MATROIDKIT_SEARCH_HPP

#include <optional>
#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// Element i of the source corresponds to element perm[i] of the target.
struct IsoWitness {
  std::vector<int> perm;
  /// Set when the two matroids were already equal and perm is the identity.
  bool equal = false;
};

/// minor(m, contract, remove) is isomorphic to the target via `iso`. Both
/// sets use m's indices; `contract` is independent and `remove` coindependent.
struct MinorWitness {
  GroundSubset contract;
  GroundSubset remove;
  IsoWitness iso;
};

/// True iff perm is a bijection of the ground sets carrying the bases of
/// `source` exactly onto the bases of `target`.
bool verifies(const Matroid& source, const Matroid& target,
              const std::vector<int>& perm);

/// Backtracking search over element bijections, pruned by basis counts,
/// circuit sizes and per-element and per-pair basis degrees. Returns the
/// identity immediately when the matroids are equal.
std::optional<IsoWitness> isomorphism(const Matroid& source, const Matroid& target);

/// Looks for a minor of m isomorphic to n: contracts each independent set of
/// size rank(m) - rank(n), then deletes each coindependent set that brings the
/// size down to |n|. Both stages run in increasing mask order and the first
/// witness in that order is returned, independent of thread scheduling.
std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n);

}  // namespace matroidkit

#endif  // MATROIDKIT_SEARCH_HPP
