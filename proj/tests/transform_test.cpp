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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <span>
#include <vector>

#include "matroidkit/construct.hpp"
#include "matroidkit/error.hpp"
#include "matroidkit/transform.hpp"
#include "oracles.hpp"

namespace matroidkit {
namespace {

using Sets = std::vector<GroundSubset>;

Matroid running_example() { return make_matroid(4, Labels{"a", "b", "c", "d"}, {{0, 1}, {0, 2}}); }

std::set<GroundSubset> as_set(std::span<const GroundSubset> s) { return {s.begin(), s.end()}; }

Sets bases(const Matroid& m) { return {m.bases().begin(), m.bases().end()}; }

TEST(Dual, RunningExample) {
  const Matroid d = dual(running_example());
  EXPECT_EQ(as_set(d.bases()), (std::set<GroundSubset>{{2, 3}, {1, 3}}));
  EXPECT_EQ(d.labels(), running_example().labels());
  EXPECT_EQ(dual(uniform_matroid(2, 5)), uniform_matroid(3, 5));
  EXPECT_EQ(dual(uniform_matroid(0, 0)), uniform_matroid(0, 0));
}

TEST(Deletion, Examples) {
  const Matroid m = running_example();
  const Matroid d = deletion(m, {0});
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.labels(), (Labels{"b", "c", "d"}));
  EXPECT_EQ(bases(d), (Sets{{0}, {1}}));
  // Deleting a coloop drops the rank.
  EXPECT_EQ(d.rank(), 1);
  EXPECT_EQ(deletion(m, {}), m);
  EXPECT_THROW(deletion(m, {4}), Error);
}

TEST(Contraction, Examples) {
  const Matroid m = running_example();
  const Matroid c = contraction(m, {1});
  EXPECT_EQ(c.labels(), (Labels{"a", "c", "d"}));
  EXPECT_EQ(bases(c), (Sets{{0}}));
  // Contracting a loop is the same as deleting it.
  EXPECT_EQ(contraction(m, {3}), deletion(m, {3}));
  EXPECT_THROW(contraction(m, {7}), Error);
}

TEST(Contraction, RankDropsByIndependentSetSize) {
  const Matroid m5 = graphic_matroid(complete_graph(5));
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
    const GroundSubset s(mask);
    if (rank_of(m5, s) != s.size()) continue;
    ASSERT_EQ(contraction(m5, s).rank(), 4 - s.size());
  }
}

TEST(Minor, Examples) {
  const Matroid m = running_example();
  const Matroid mn = minor(m, {1}, {3});
  EXPECT_EQ(mn.size(), 2u);
  EXPECT_EQ(mn.labels(), (Labels{"a", "c"}));
  // b is parallel to c, so contracting b turns c into a loop.
  EXPECT_EQ(mn, direct_sum(uniform_matroid(1, 1), uniform_matroid(0, 1)));
  EXPECT_THROW(minor(m, {1}, {1, 3}), Error);
  EXPECT_THROW(minor(m, {9}, {}), Error);
}

TEST(Restriction, IsDeletionOfComplement) {
  const Matroid m = graphic_matroid(complete_graph(4));
  const GroundSubset s{0, 2, 3, 5};
  EXPECT_EQ(restriction(m, s), deletion(m, s.complement(m.size())));
}

class TransformInvariants : public ::testing::TestWithParam<int> {};

TEST_P(TransformInvariants, Hold) {
  oracle::Rng rng(static_cast<std::uint64_t>(GetParam()) * 101);
  std::uniform_int_distribution<std::uint64_t> bits(0, 255);
  for (int i = 0; i < 20; ++i) {
    const Matroid m = oracle::random_small(rng);
    const std::size_t n = m.size();
    const Matroid d = dual(m);
    EXPECT_EQ(dual(d), m);
    EXPECT_EQ(loops(d), coloops(m));
    EXPECT_EQ(m.rank() + d.rank(), static_cast<int>(n));
    Sets complements;
    for (GroundSubset h : hyperplanes(m)) complements.push_back(h.complement(n));
    std::sort(complements.begin(), complements.end());
    EXPECT_EQ(circuits(d), complements);
    const GroundSubset full = GroundSubset::full(n);
    const GroundSubset x = GroundSubset(bits(rng)) & full;
    const GroundSubset y = (GroundSubset(bits(rng)) & full) - x;
    EXPECT_EQ(deletion(m, x), dual(contraction(d, x)));
    EXPECT_EQ(contraction(m, x), dual(deletion(d, x)));
    const Matroid mn = minor(m, x, y);
    EXPECT_EQ(mn.size(), n - static_cast<std::size_t>(x.size() + y.size()));
    EXPECT_EQ(mn, deletion(contraction(m, x), compress(y, x.complement(n))));
    // Rank function of a contraction.
    const GroundSubset rest = x.complement(n);
    const Matroid c = contraction(m, x);
    for (GroundSubset s : oracle::all_subsets(c.size())) {
      ASSERT_EQ(rank_of(c, s), oracle::rank(m, expand(s, rest) | x) - oracle::rank(m, x));
    }
    EXPECT_TRUE(is_valid(mn));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, TransformInvariants, ::testing::Range(1, 11));

}  // namespace
}  // namespace matroidkit
