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

#ifndef MATROIDKIT_TRANSFORM_HPP
#define MATROIDKIT_TRANSFORM_HPP

#include "matroidkit/matroid.hpp"

namespace matroidkit {

// Minors are re-indexed densely: the surviving elements keep their relative
// order and are renumbered 0..m-1, carrying their labels along.

/// Bases are the complements of the bases of m.
Matroid dual(const Matroid& m);

/// m restricted to s: bases are the maximal intersections B & s.
Matroid restriction(const Matroid& m, GroundSubset s);
/// Restriction to the complement of s.
Matroid deletion(const Matroid& m, GroundSubset s);
/// dual(deletion(dual(m), s)).
Matroid contraction(const Matroid& m, GroundSubset s);

/// (m / contract) \ remove, with both sets given in m's own indices. Throws
/// Error if they overlap or leave the ground set.
Matroid minor(const Matroid& m, GroundSubset contract, GroundSubset remove);

}  // namespace matroidkit

#endif  // MATROIDKIT_TRANSFORM_HPP
