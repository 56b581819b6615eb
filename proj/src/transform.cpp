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

#include "matroidkit/transform.hpp"

#include <optional>
#include <string>

#include "matroidkit/error.hpp"

namespace matroidkit {

namespace {

void check_subset(const Matroid& m, GroundSubset s) {
  if (!s.is_subset_of(m.ground())) {
    throw Error("subset has elements outside the ground set of size " +
                std::to_string(m.size()));
  }
}

std::optional<Labels> labels_on(const Matroid& m, GroundSubset keep) {
  if (!m.labels()) return std::nullopt;
  Labels out;
  keep.for_each([&](int e) { out.push_back((*m.labels())[e]); });
  return out;
}

}  // namespace

Matroid dual(const Matroid& m) {
  std::vector<GroundSubset> bases;
  bases.reserve(m.basis_count());
  for (GroundSubset b : m.bases()) bases.push_back(b.complement(m.size()));
  return Matroid(m.size(), std::move(bases), m.labels());
}

Matroid restriction(const Matroid& m, GroundSubset s) {
  check_subset(m, s);
  const int r = rank_of(m, s);
  std::vector<GroundSubset> bases;
  for (GroundSubset b : m.bases()) {
    const GroundSubset part = b & s;
    if (part.size() == r) bases.push_back(compress(part, s));
  }
  return Matroid(static_cast<std::size_t>(s.size()), std::move(bases),
                 labels_on(m, s));
}

Matroid deletion(const Matroid& m, GroundSubset s) {
  check_subset(m, s);
  return restriction(m, s.complement(m.size()));
}

Matroid contraction(const Matroid& m, GroundSubset s) {
  check_subset(m, s);
  return dual(deletion(dual(m), s));
}

Matroid minor(const Matroid& m, GroundSubset contract, GroundSubset remove) {
  check_subset(m, contract);
  check_subset(m, remove);
  if (!(contract & remove).empty()) {
    throw Error("contract and delete sets must be disjoint");
  }
  const Matroid contracted = contraction(m, contract);
  return deletion(contracted, compress(remove, contract.complement(m.size())));
}

}  // namespace matroidkit
