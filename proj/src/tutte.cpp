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

#include "matroidkit/tutte.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "matroidkit/construct.hpp"

namespace matroidkit {

namespace {

// Minors are kept in the original indexing: `ground` holds the surviving
// elements and every basis is a subset of it.
class TutteRecursion {
 public:
  BivarPoly run(GroundSubset ground, std::vector<GroundSubset> bases) {
    std::vector<std::uint64_t> key_bases;
    key_bases.reserve(bases.size());
    for (GroundSubset b : bases) key_bases.push_back(b.bits());
    Key key{ground.bits(), std::move(key_bases)};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    GroundSubset used, common = ground;
    for (GroundSubset b : bases) {
      used |= b;
      common &= b;
    }
    const GroundSubset loop_set = ground - used;
    const GroundSubset pivots = ground - loop_set - common;
    BivarPoly result;
    if (pivots.empty()) {
      result = BivarPoly::monomial(common.size(), loop_set.size());
    } else {
      const int e = pivots.min();
      std::vector<GroundSubset> without, with;
      for (GroundSubset b : bases) {
        if (b.contains(e)) {
          with.push_back(b.without(e));
        } else {
          without.push_back(b);
        }
      }
      const GroundSubset smaller = ground.without(e);
      result = run(smaller, std::move(without));
      result += run(smaller, std::move(with));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  using Key = std::pair<std::uint64_t, std::vector<std::uint64_t>>;
  std::map<Key, BivarPoly> memo_;
};

}  // namespace

BivarPoly tutte_polynomial(const Matroid& m) {
  TutteRecursion recursion;
  return recursion.run(m.ground(), {m.bases().begin(), m.bases().end()});
}

BigInt tutte_evaluate(const Matroid& m, const BigInt& x, const BigInt& y) {
  return tutte_polynomial(m).evaluate(x, y);
}

UniPoly chromatic_polynomial(const Graph& g) {
  const std::size_t c = g.component_count();
  const std::size_t r = g.vertex_count() - c;
  const BivarPoly t = tutte_polynomial(graphic_matroid(g));
  const UniPoly one_minus_k({1, -1});
  UniPoly p = t.substitute(one_minus_k, UniPoly{}) * UniPoly::monomial(static_cast<int>(c));
  if (r % 2 == 1) p = p * UniPoly::constant(-1);
  return p;
}

}  // namespace matroidkit
