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

#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "matroidkit/construct.hpp"
#include "matroidkit/error.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/transform.hpp"
#include "oracles.hpp"

namespace matroidkit {
namespace {

using Sets = std::vector<GroundSubset>;

Matroid running_example() { return make_matroid(4, Labels{"a", "b", "c", "d"}, {{0, 1}, {0, 2}}); }

TEST(GroundSubset, SetOperations) {
  const GroundSubset s{0, 2, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.min(), 0);
  EXPECT_EQ(s.max(), 5);
  EXPECT_EQ((s | GroundSubset{1}), (GroundSubset{0, 1, 2, 5}));
  EXPECT_EQ((s & GroundSubset{2, 3, 5}), (GroundSubset{2, 5}));
  EXPECT_EQ((s - GroundSubset{0}), (GroundSubset{2, 5}));
  EXPECT_EQ(s.complement(6), (GroundSubset{1, 3, 4}));
  EXPECT_TRUE((GroundSubset{2}).is_subset_of(s));
  EXPECT_EQ(s.elements(), (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(GroundSubset::full(64).size(), 64);
  EXPECT_TRUE(GroundSubset{}.empty());
}

TEST(GroundSubset, CompressAndExpandAreInverse) {
  const GroundSubset domain{1, 3, 4, 7};
  EXPECT_EQ(compress(GroundSubset{3, 7}, domain), (GroundSubset{1, 3}));
  EXPECT_EQ(expand(GroundSubset{0, 2}, domain), (GroundSubset{1, 4}));
}

TEST(GroundSubset, KSubsetsInColexOrder) {
  std::vector<GroundSubset> seen;
  for_each_k_subset(4, 2, [&](GroundSubset s) {
    seen.push_back(s);
    return true;
  });
  const Sets expected = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  EXPECT_EQ(seen, expected);
  int visited = 0;
  for_each_k_subset(6, 3, [&](GroundSubset) { return ++visited < 5; });
  EXPECT_EQ(visited, 5);
}

TEST(MakeMatroid, RunningExample) {
  const Matroid m = running_example();
  EXPECT_EQ(m.basis_count(), 2u);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.label(3), "d");
}

TEST(MakeMatroid, FreeMatroidOnOneElement) {
  const Matroid m = make_matroid(1, std::nullopt, {{0}});
  EXPECT_EQ(m.rank(), 1);
  EXPECT_EQ(coloops(m), GroundSubset{0});
  EXPECT_EQ(m.label(0), "0");
}

TEST(MakeMatroid, DefersValidity) {
  const Matroid m = make_matroid(4, std::nullopt, {{0, 1}, {2, 3}});
  EXPECT_EQ(m.basis_count(), 2u);
}

TEST(MakeMatroid, DeduplicatesAndSorts) {
  const Matroid m = make_matroid(3, std::nullopt, {{1, 2}, {0, 1}, {2, 1}});
  EXPECT_EQ(m.basis_count(), 2u);
  EXPECT_EQ(m.bases()[0], (GroundSubset{0, 1}));
}

TEST(MakeMatroid, Errors) {
  EXPECT_THROW(make_matroid(3, std::nullopt, {}), Error);
  EXPECT_THROW(make_matroid(3, std::nullopt, {{0, 3}}), Error);
  EXPECT_THROW(make_matroid(3, std::nullopt, {{0, 1}, {2}}), Error);
  EXPECT_THROW(make_matroid(2, Labels{"a"}, {{0}}), Error);
  EXPECT_THROW(make_matroid(65, std::nullopt, {{0}}), Error);
}

TEST(IsValid, Examples) {
  EXPECT_TRUE(is_valid(running_example()));
  EXPECT_FALSE(is_valid(make_matroid(4, std::nullopt, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_valid(uniform_matroid(2, 4)));
}

TEST(Equals, IgnoresLabels) {
  const Matroid m = running_example();
  EXPECT_TRUE(m == m.with_labels(std::nullopt));
  EXPECT_TRUE(m == dual(dual(m)));
  EXPECT_FALSE(m == uniform_matroid(2, 4));
  EXPECT_FALSE(uniform_matroid(1, 2) == uniform_matroid(1, 3));
}

TEST(RankOf, Examples) {
  const Matroid m = running_example();
  EXPECT_EQ(rank_of(m, m.ground()), 2);
  EXPECT_EQ(rank_of(m, {0, 3}), 1);
  EXPECT_EQ(rank_of(m, {}), 0);
}

TEST(Closure, Examples) {
  const Matroid m = running_example();
  EXPECT_EQ(closure(m, {2, 3}), (GroundSubset{1, 2, 3}));
  EXPECT_EQ(closure(m, m.ground()), m.ground());
  EXPECT_EQ(closure(m, {}), GroundSubset{3});
}

TEST(IsDependent, Examples) {
  const Matroid m = running_example();
  EXPECT_FALSE(is_dependent(m, {1}));
  EXPECT_TRUE(is_dependent(m, {3}));
  EXPECT_FALSE(is_dependent(m, {}));
  EXPECT_TRUE(is_dependent(m, {1, 2}));
}

TEST(Independents, Examples) {
  const Matroid m = running_example();
  EXPECT_EQ(independents(m, 2), (Sets{{0, 1}, {0, 2}}));
  EXPECT_EQ(independents(m, 0), (Sets{{}}));
  EXPECT_EQ(independents(uniform_matroid(2, 4), 1), (Sets{{0}, {1}, {2}, {3}}));
  EXPECT_TRUE(independents(m, 3).empty());
}

TEST(Circuits, Examples) {
  EXPECT_EQ(circuits(running_example()), (Sets{{1, 2}, {3}}));
  // Minimal dependent sets of U(2,4), frozen from the subset-enumeration oracle.
  EXPECT_EQ(circuits(uniform_matroid(2, 4)), (Sets{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  EXPECT_TRUE(circuits(uniform_matroid(5, 5)).empty());
}

TEST(LoopsAndColoops, Examples) {
  const Matroid m = running_example();
  EXPECT_EQ(loops(m), GroundSubset{3});
  EXPECT_EQ(coloops(m), GroundSubset{0});
  EXPECT_EQ(loops(dual(m)), GroundSubset{0});
  EXPECT_TRUE(loops(uniform_matroid(2, 4)).empty());
}

TEST(Flats, Examples) {
  const Matroid m = running_example();
  const std::vector<Sets> expected = {{{3}}, {{0, 3}, {1, 2, 3}}, {{0, 1, 2, 3}}};
  EXPECT_EQ(flats(m), expected);
  // Closures of all 16 subsets of U(2,4), frozen from the oracle.
  const std::vector<Sets> u24 = {{{}}, {{0}, {1}, {2}, {3}}, {{0, 1, 2, 3}}};
  EXPECT_EQ(flats(uniform_matroid(2, 4)), u24);
  std::size_t total = 0;
  for (const auto& level : flats(specific_matroid("vamos"))) total += level.size();
  EXPECT_EQ(total, 79u);
}

TEST(Fvector, Examples) {
  EXPECT_EQ(fvector(running_example()), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(fvector(uniform_matroid(2, 4)), (std::vector<std::size_t>{1, 4, 1}));
  EXPECT_EQ(fvector(uniform_matroid(0, 0)), (std::vector<std::size_t>{1}));
}

TEST(Hyperplanes, Examples) {
  EXPECT_EQ(hyperplanes(running_example()), (Sets{{0, 3}, {1, 2, 3}}));
  EXPECT_EQ(hyperplanes(uniform_matroid(2, 4)), (Sets{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(hyperplanes(uniform_matroid(1, 1)), (Sets{{}}));
}

TEST(Labels, Translation) {
  const Matroid m = running_example();
  const std::vector<int> ab = {0, 1};
  EXPECT_EQ(labels_of(m, ab), (Labels{"a", "b"}));
  const std::vector<std::string> ac = {"a", "c"};
  EXPECT_EQ(indices_of(m, ac), (std::vector<int>{0, 2}));
  EXPECT_TRUE(labels_of(m, std::vector<int>{}).empty());
  EXPECT_THROW(labels_of(m, std::vector<int>{4}), Error);
  EXPECT_THROW(indices_of(m, std::vector<std::string>{"z"}), Error);
  EXPECT_THROW(labels_of(uniform_matroid(1, 2), ab), Error);
}

TEST(Memoization, ConcurrentReadersSeeOneResult) {
  const Matroid v = specific_matroid("vamos");
  std::vector<const void*> seen(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    threads.emplace_back([&, i] { seen[i] = &v.flats(); });
  }
  for (auto& t : threads) t.join();
  for (const void* p : seen) EXPECT_EQ(p, seen.front());
  const Matroid copy = v;
  EXPECT_EQ(&copy.circuits(), &v.circuits());
}

class RandomCore : public ::testing::TestWithParam<int> {};

TEST_P(RandomCore, QueriesMatchBruteForce) {
  oracle::Rng rng(static_cast<std::uint64_t>(GetParam()));
  for (int i = 0; i < 10; ++i) {
    const Matroid m = oracle::random_small(rng);
    EXPECT_TRUE(is_valid(m));
    EXPECT_EQ(circuits(m), oracle::circuits(m));
    EXPECT_EQ(flats(m), oracle::flats(m));
    for (GroundSubset s : oracle::all_subsets(m.size())) {
      ASSERT_EQ(rank_of(m, s), oracle::rank(m, s));
      ASSERT_EQ(is_flat(m, s), oracle::closure(m, s) == s);
    }
    std::vector<GroundSubset> all_flats;
    std::size_t total = 0;
    for (const auto& level : flats(m)) {
      all_flats.insert(all_flats.end(), level.begin(), level.end());
      total += level.size();
    }
    const auto fv = fvector(m);
    EXPECT_EQ(fv.front(), 1u);
    EXPECT_EQ(fv.back(), 1u);
    EXPECT_EQ(std::accumulate(fv.begin(), fv.end(), std::size_t{0}), total);
    const std::set<GroundSubset> flat_set(all_flats.begin(), all_flats.end());
    for (GroundSubset a : all_flats) {
      for (GroundSubset b : all_flats) EXPECT_TRUE(flat_set.count(a & b));
    }
    const auto h = hyperplanes(m);
    if (m.rank() > 0) EXPECT_EQ(h, flats(m)[static_cast<std::size_t>(m.rank() - 1)]);
    for (int k = 0; k <= m.rank(); ++k) {
      for (GroundSubset s : independents(m, k)) EXPECT_TRUE(oracle::independent(m, s));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCore, ::testing::Range(1, 11));

}  // namespace
}  // namespace matroidkit
