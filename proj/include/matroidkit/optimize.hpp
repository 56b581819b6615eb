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

#ifndef MATROIDKIT_OPTIMIZE_HPP
#define MATROIDKIT_OPTIMIZE_HPP

#include <span>
#include <string>
#include <vector>

#include "matroidkit/error.hpp"
#include "matroidkit/exact_matrix.hpp"
#include "matroidkit/matroid.hpp"

namespace matroidkit {

/// Matroid greedy algorithm. Repeatedly adds the heaviest element that keeps
/// the chosen set independent (ties go to the smaller index) until the set
/// is a basis, so the result is a maximum-weight basis even when some
/// weights are negative. Returns indices in selection order.
///
/// Weight is any totally ordered type; double and Rational are the two used
/// by the command line.
template <typename Weight>
std::vector<int> greedy(const Matroid& m, std::span<const Weight> weights) {
  if (weights.size() != m.size()) {
    throw Error("expected " + std::to_string(m.size()) + " weights, got " +
                std::to_string(weights.size()));
  }
  std::vector<int> order;
  GroundSubset chosen;
  while (chosen.size() < m.rank()) {
    int best = -1;
    for (int e = 0; e < static_cast<int>(m.size()); ++e) {
      if (chosen.contains(e)) continue;
      if (best >= 0 && !(weights[e] > weights[best])) continue;
      if (rank_of(m, chosen.with(e)) == chosen.size() + 1) best = e;
    }
    if (best < 0) throw Error("no element extends the current independent set");
    chosen = chosen.with(best);
    order.push_back(best);
  }
  return order;
}

template <typename Weight>
std::vector<int> greedy(const Matroid& m, const std::vector<Weight>& weights) {
  return greedy(m, std::span<const Weight>(weights));
}

}  // namespace matroidkit

#endif  // MATROIDKIT_OPTIMIZE_HPP
