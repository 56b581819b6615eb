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

#ifndef MATROIDKIT_TUTTE_HPP
#define MATROIDKIT_TUTTE_HPP

#include "matroidkit/graph.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/polynomial.hpp"

namespace matroidkit {

/// Tutte polynomial by deletion-contraction on the smallest element that is
/// neither a loop nor a coloop, bottoming out at x^a y^b for a matroid made
/// of a coloops and b loops. Minors with identical ground set and bases are
/// computed once.
BivarPoly tutte_polynomial(const Matroid& m);

BigInt tutte_evaluate(const Matroid& m, const BigInt& x, const BigInt& y);

/// P(G, k) = (-1)^(v - c) k^c T(1 - k, 0) with c the number of connected
/// components of g.
UniPoly chromatic_polynomial(const Graph& g);

}  // namespace matroidkit

#endif  // MATROIDKIT_TUTTE_HPP
