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

#ifndef MATROIDKIT_ALGEBRA_HPP
#define MATROIDKIT_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// Indicator vectors of the bases (in basis order) and the affine dimension
/// of their convex hull.
struct PolytopeVertices {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<int>> vertices;
  std::size_t dim = 0;
};

PolytopeVertices polytope_vertices(const Matroid& m);

/// Presentation of the graded ring Z[x_F] / (I1 + I2) of a loopless matroid,
/// one variable per nonempty proper flat F.
///
///   I1 is generated, for each element i != 0, by
///      sum_{F containing 0} x_F  -  sum_{F containing i} x_F
///   I2 by the products x_F x_G of incomparable flats.
struct ChowPresentation {
  using LinearForm = std::vector<std::pair<int, std::int64_t>>;  // (variable, coefficient)

  std::size_t ground_size = 0;
  int rank = 0;
  /// Variables, ordered by rank and then lexicographically by elements.
  std::vector<GroundSubset> flats;
  std::vector<LinearForm> linear;
  /// Incomparable variable pairs (a, b) with a < b.
  std::vector<std::pair<int, int>> quadrics;

  std::size_t variable_count() const { return flats.size(); }
};

/// Throws Error if m has loops.
ChowPresentation chow_presentation(const Matroid& m);

struct ChowOptions {
  /// Whole polynomial ring (every monomial a column, every multiple of every
  /// generator a row) or the quotient by I2 first, where only monomials
  /// supported on a chain of flats survive. Both give the same dimension.
  enum class Method { kFull, kChainReduced };

  Method method = Method::kFull;
  /// Eliminate over Q instead of GF(prime).
  bool exact = false;
  std::uint64_t prime = 1073741789;
};

/// Dimension of the degree-d piece of the ring, for 0 <= d <= rank - 1.
std::size_t chow_hilbert(const ChowPresentation& chow, int degree,
                         const ChowOptions& options = {});
std::size_t chow_hilbert(const Matroid& m, int degree, const ChowOptions& options = {});
/// Degrees 0 .. rank - 1.
std::vector<std::size_t> chow_hilbert_function(const Matroid& m,
                                               const ChowOptions& options = {});

}  // namespace matroidkit

#endif  // MATROIDKIT_ALGEBRA_HPP
