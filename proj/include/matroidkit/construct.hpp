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

#ifndef MATROIDKIT_CONSTRUCT_HPP
#define MATROIDKIT_CONSTRUCT_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "matroidkit/exact_matrix.hpp"
#include "matroidkit/graph.hpp"
#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// U(r, n): every r-subset of {0..n-1} is a basis.
Matroid uniform_matroid(int r, std::size_t n);

/// Column matroid of `a`. Columns are labelled by their rendering.
Matroid linear_matroid(const ExactMatrix& a);

/// Cycle matroid of `g`, built from its cycles as circuits. Labels are the
/// edges, written "{u,w}".
Matroid graphic_matroid(const Graph& g);

/// Matroid whose circuits are the inclusion-minimal members of `circuits`.
/// The rank is the size of a greedily grown circuit-free set; bases are all
/// circuit-free sets of that size. Throws Error if `target_rank` is given and
/// differs from the computed rank.
Matroid matroid_from_circuits(std::size_t n,
                              const std::vector<GroundSubset>& circuits,
                              std::optional<int> target_rank = std::nullopt);

/// Bases are the r-subsets of {0..n-1} not listed in `nonbases`.
Matroid matroid_from_nonbases(std::size_t n,
                              const std::vector<GroundSubset>& nonbases, int r);

/// "fano" or "vamos".
Matroid specific_matroid(std::string_view name);

/// Disjoint union. Elements of `b` are shifted up by a.size(); labels become
/// "(label, 0)" and "(label, 1)".
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Connected components as restrictions, ordered by their smallest element.
std::vector<Matroid> components(const Matroid& m);
/// The ground-set partition underlying components().
std::vector<GroundSubset> component_parts(const Matroid& m);

}  // namespace matroidkit

#endif  // MATROIDKIT_CONSTRUCT_HPP
