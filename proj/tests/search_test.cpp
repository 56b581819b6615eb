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
#include <cstdlib>
#include <numeric>
#include <vector>

#include "matroidkit/construct.hpp"
#include "matroidkit/search.hpp"
#include "matroidkit/transform.hpp"
#include "oracles.hpp"

namespace matroidkit {
namespace {

using Sets = std::vector<GroundSubset>;

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  std::vector<std::vector<int>> bases;
  for (GroundSubset b : m.bases()) {
    std::vector<int> image;
    b.for_each([&](int e) { image.push_back(perm[static_cast<std::size_t>(e)]); });
    bases.push_back(image);
  }
  return make_matroid(m.size(), std::nullopt, bases);
}

Matroid non_fano() {
  // Fano plane with one line relaxed.
  return matroid_from_nonbases(
      7, Sets{{0, 4, 5}, {0, 3, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 4}, {2, 5, 6}}, 3);
}

TEST(Isomorphism, Examples) {
  const Matroid a = make_matroid(4, std::nullopt, {{0, 1}, {0, 2}});
  const Matroid b = make_matroid(4, std::nullopt, {{1, 2}, {2, 3}});
  const auto iso = isomorphism(a, b);
  ASSERT_TRUE(iso.has_value());
  EXPECT_FALSE(iso->equal);
  EXPECT_TRUE(verifies(a, b, iso->perm));
  const auto same = isomorphism(a, a);
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(same->equal);
  EXPECT_EQ(same->perm, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_FALSE(isomorphism(uniform_matroid(2, 4), uniform_matroid(1, 4)).has_value());
  EXPECT_FALSE(isomorphism(uniform_matroid(2, 4), uniform_matroid(2, 5)).has_value());
  EXPECT_FALSE(isomorphism(specific_matroid("fano"), non_fano()).has_value());
}

TEST(Isomorphism, VamosIsSelfDual) {
  const Matroid v = specific_matroid("vamos");
  const auto iso = isomorphism(v, dual(v));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(oracle::maps_bases(v, dual(v), iso->perm));
}

TEST(Verifies, RejectsBadPermutations) {
  const Matroid m = make_matroid(4, std::nullopt, {{0, 1}, {0, 2}});
  EXPECT_TRUE(verifies(m, m, {0, 2, 1, 3}));
  EXPECT_FALSE(verifies(m, m, {1, 0, 2, 3}));
  EXPECT_FALSE(verifies(m, m, {0, 0, 1, 3}));
  EXPECT_FALSE(verifies(m, m, {0, 1, 2}));
}

TEST(Isomorphism, FindsRandomRelabellings) {
  oracle::Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const Matroid m = oracle::random_small(rng);
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Matroid image = relabel(m, perm);
    const auto iso = isomorphism(m, image);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(oracle::maps_bases(m, image, iso->perm));
    // Isomorphism survives dualization.
    EXPECT_TRUE(isomorphism(dual(m), dual(image)).has_value());
    EXPECT_TRUE(isomorphism(image, m).has_value());
  }
}

TEST(Isomorphism, AgreesWithBruteForce) {
  oracle::Rng rng(23);
  std::uniform_int_distribution<std::size_t> rows(1, 3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 4 + static_cast<std::size_t>(i % 3);
    const Matroid a = oracle::random_linear(rng, 2, rows(rng), n);
    const Matroid b = oracle::random_linear(rng, 2, rows(rng), n);
    const auto iso = isomorphism(a, b);
    ASSERT_EQ(iso.has_value(), oracle::isomorphic(a, b)) << i;
    if (iso) EXPECT_TRUE(oracle::maps_bases(a, b, iso->perm));
    EXPECT_EQ(iso.has_value(), isomorphism(b, a).has_value());
  }
}

void expect_sound(const Matroid& m, const Matroid& n, const MinorWitness& w) {
  EXPECT_TRUE((w.contract & w.remove).empty());
  const Matroid mn = minor(m, w.contract, w.remove);
  EXPECT_TRUE(verifies(mn, n, w.iso.perm));
}

TEST(HasMinor, Examples) {
  const Matroid k5 = graphic_matroid(complete_graph(5));
  const Matroid k4 = graphic_matroid(complete_graph(4));
  const auto w = has_minor(k5, k4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->contract, GroundSubset{0});
  EXPECT_EQ(w->remove, (GroundSubset{1, 2, 3}));
  expect_sound(k5, k4, *w);
  // Graphic matroids are binary, so no U(2,4) minor.
  EXPECT_FALSE(has_minor(k5, uniform_matroid(2, 4)).has_value());
  EXPECT_FALSE(has_minor(specific_matroid("fano"), uniform_matroid(2, 4)).has_value());
  EXPECT_TRUE(has_minor(specific_matroid("vamos"), uniform_matroid(2, 4)).has_value());
  EXPECT_FALSE(has_minor(k4, k5).has_value());
  const auto self = has_minor(k4, k4);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->contract.empty() && self->remove.empty());
}

TEST(HasMinor, WitnessesAreSound) {
  oracle::Rng rng(29);
  int found = 0;
  for (int i = 0; i < 80; ++i) {
    const Matroid m = oracle::random_small(rng, 7);
    const Matroid n = oracle::random_small(rng, 4);
    const auto w = has_minor(m, n);
    if (!w) continue;
    ++found;
    expect_sound(m, n, *w);
  }
  EXPECT_GT(found, 0);
}

TEST(HasMinor, EveryMinorIsFound) {
  oracle::Rng rng(31);
  std::uniform_int_distribution<std::uint64_t> bits(0, 127);
  for (int i = 0; i < 60; ++i) {
    const Matroid m = oracle::random_small(rng, 7);
    const GroundSubset full = GroundSubset::full(m.size());
    const GroundSubset c = GroundSubset(bits(rng)) & full;
    const GroundSubset d = (GroundSubset(bits(rng)) & full) - c;
    const Matroid n = minor(m, c, d);
    const auto w = has_minor(m, n);
    ASSERT_TRUE(w.has_value());
    expect_sound(m, n, *w);
  }
}

TEST(HasMinor, WitnessIndependentOfThreadCount) {
  const Matroid k5 = graphic_matroid(complete_graph(5));
  const Matroid target = uniform_matroid(2, 3);
  ::setenv("MATROIDKIT_THREADS", "1", 1);
  const auto serial = has_minor(k5, target);
  ::setenv("MATROIDKIT_THREADS", "4", 1);
  const auto parallel = has_minor(k5, target);
  ::unsetenv("MATROIDKIT_THREADS");
  ASSERT_TRUE(serial && parallel);
  EXPECT_EQ(serial->contract, parallel->contract);
  EXPECT_EQ(serial->remove, parallel->remove);
  EXPECT_EQ(serial->iso.perm, parallel->iso.perm);
}

}  // namespace
}  // namespace matroidkit
