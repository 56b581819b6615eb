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

// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "matroidkit/algebra.hpp"
#include "matroidkit/construct.hpp"
#include "matroidkit/graph.hpp"
#include "matroidkit/matroid.hpp"
#include "matroidkit/optimize.hpp"
#include "matroidkit/search.hpp"
#include "matroidkit/transform.hpp"
#include "matroidkit/tutte.hpp"
#include "oracles.hpp"
#include "property_suites.hpp"

namespace {

using namespace matroidkit;
using Clock = std::chrono::steady_clock;
using Sets = std::vector<GroundSubset>;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }

  /// Runs f and fails the criterion if it takes longer than limit_seconds.
  void timed(const std::string& what, double limit_seconds, const std::function<void()>& f) {
    const auto start = Clock::now();
    f();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    timings_ += (timings_.empty() ? "" : ", ") + what + " " + format(seconds) + " s < " +
                format(limit_seconds) + " s";
    expect(seconds < limit_seconds, what + " took " + format(seconds) + " s");
  }

  const std::vector<std::string>& failures() const { return failures_; }
  const std::string& timings() const { return timings_; }

 private:
  static std::string format(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, s < 10 ? "%.3f" : "%.0f", s);
    return buf;
  }

  std::vector<std::string> failures_;
  std::string timings_;
};

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> body;
};

Matroid running_example() { return make_matroid(4, Labels{"a", "b", "c", "d"}, {{0, 1}, {0, 2}}); }

Sets sets(std::initializer_list<std::initializer_list<int>> lists) {
  Sets out;
  for (auto l : lists) out.emplace_back(l);
  return out;
}

std::vector<Criterion> criteria() {
  return {
      {1, "running example queries", [](Check& c) {
         c.timed("total", 1.0, [&] {
           const Matroid m = running_example();
           const GroundSubset all = m.ground();
           c.expect(m.rank() == 2, "rank");
           c.expect(rank_of(m, {0, 3}) == 1, "rankOf {0,3}");
           c.expect(circuits(m) == sets({{1, 2}, {3}}), "circuits");
           c.expect(independents(m, 2) == sets({{0, 1}, {0, 2}}), "independents of size 2");
           c.expect(loops(m) == GroundSubset{3} && coloops(m) == GroundSubset{0}, "loops/coloops");
           c.expect(closure(m, {2, 3}) == GroundSubset({1, 2, 3}), "closure {2,3}");
           c.expect(hyperplanes(m) == sets({{0, 3}, {1, 2, 3}}), "hyperplanes");
           const std::vector<Sets> expected_flats = {sets({{3}}), sets({{0, 3}, {1, 2, 3}}),
                                                     Sets{all}};
           c.expect(flats(m) == expected_flats, "flats");
           c.expect(fvector(m) == std::vector<std::size_t>{1, 2, 1}, "fvector");
           const Matroid d = dual(m);
           c.expect(std::ranges::equal(d.bases(), sets({{1, 3}, {2, 3}})), "dual bases {{2,3},{1,3}}");
           c.expect(dual(d) == m, "dual involution");
           c.expect(loops(d) == GroundSubset{0}, "dual loops");
           c.expect(circuits(d) == sets({{0}, {1, 2}}), "dual circuits");
           const Matroid del = deletion(m, {3});
           c.expect(del.size() == 3 && std::ranges::equal(del.bases(), sets({{0, 1}, {0, 2}})) &&
                        del.labels() == Labels{"a", "b", "c"},
                    "deletion of {3}");
           const Matroid con = contraction(m, {1});
           c.expect(con.size() == 3 && std::ranges::equal(con.bases(), sets({{0}})) &&
                        con.labels() == Labels{"a", "c", "d"},
                    "contraction of {1}");
         });
       }},
      {2, "isValid", [](Check& c) {
         c.timed("total", 1.0, [&] {
           c.expect(is_valid(running_example()), "running example valid");
           c.expect(!is_valid(make_matroid(4, std::nullopt, {{0, 1}, {2, 3}})),
                    "{{0,1},{2,3}} invalid");
         });
       }},
      {3, "uniform matroid U(2,4)", [](Check& c) {
         c.timed("total", 1.0, [&] {
           const Matroid u = uniform_matroid(2, 4);
           c.expect(std::ranges::equal(u.bases(),
                                       sets({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}})),
                    "six bases in order");
         });
       }},
      {4, "linear matroid isomorphic to the running example", [](Check& c) {
         c.timed("total", 1.0, [&] {
           const std::vector<Rational> entries = {0, 4, -1, 6, 0, Rational(2, 3), 7, 1};
           const Matroid ma = linear_matroid(ExactMatrix(Field::rationals(), 2, 4, entries));
           const Matroid m = running_example();
           const auto iso = isomorphism(ma, m);
           c.expect(iso.has_value(), "isomorphism found");
           if (iso) {
             c.expect(verifies(ma, m, iso->perm) && oracle::maps_bases(ma, m, iso->perm),
                      "witness maps bases onto bases");
           }
         });
       }},
      {5, "cycle enumeration", [](Check& c) {
         c.timed("GP(5,2)", 5.0, [&] {
           c.expect(get_cycles(generalized_petersen(5, 2)).size() == 57, "GP(5,2) has 57 cycles");
         });
         c.timed("K8", 60.0, [&] {
           c.expect(get_cycles(complete_graph(8)).size() == 8018, "K8 has 8018 cycles");
         });
       }},
      {6, "graphic matroids", [](Check& c) {
         c.timed("total", 5.0, [&] {
           c.expect(graphic_matroid(complete_graph(5)).basis_count() == 125, "M(K5) has 125 bases");
           c.expect(graphic_matroid(complete_graph(4)).basis_count() == 16, "M(K4) has 16 bases");
         });
       }},
      {7, "Fano matroid from nonbases", [](Check& c) {
         c.timed("total", 1.0, [&] {
           const Matroid f7 = matroid_from_nonbases(
               7, sets({{0, 1, 2}, {0, 4, 5}, {0, 3, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 4}, {2, 5, 6}}),
               3);
           c.expect(f7.basis_count() == 28, "28 bases");
         });
       }},
      {8, "circuit entry round trip", [](Check& c) {
         c.timed("total", 1.0, [&] {
           c.expect(matroid_from_circuits(4, sets({{1, 2}, {3}}), 2) == running_example(),
                    "equals the running example");
         });
       }},
      {9, "direct sum and components", [](Check& c) {
         c.timed("total", 1.0, [&] {
           const Matroid sum = direct_sum(uniform_matroid(2, 4), graphic_matroid(complete_graph(3)));
           c.expect(sum.size() == 7, "ground size 7");
           const auto parts = components(sum);
           Matroid rebuilt = parts.front();
           for (std::size_t i = 1; i < parts.size(); ++i) rebuilt = direct_sum(rebuilt, parts[i]);
           c.expect(rebuilt == sum, "direct sum of components reproduces the matroid");
         });
       }},
      {10, "minor of M(K5)", [](Check& c) {
         c.timed("total", 5.0, [&] {
           const Matroid m5 = graphic_matroid(complete_graph(5));
           const Matroid n = minor(m5, {9}, {3, 5, 8});
           c.expect(n.size() == 6 && n.basis_count() == 16, "6 elements, 16 bases");
           c.expect(n == graphic_matroid(complete_graph(4)), "equals M(K4)");
         });
       }},
      {11, "minor search in M(K5)", [](Check& c) {
         c.timed("total", 600.0, [&] {
           const Matroid m5 = graphic_matroid(complete_graph(5));
           const Matroid f7 = specific_matroid("fano");
           c.expect(!has_minor(m5, uniform_matroid(2, 4)), "no U(2,4) minor");
           c.expect(!has_minor(m5, f7), "no F7 minor");
           c.expect(!has_minor(m5, dual(f7)), "no F7* minor");
           const Matroid k4 = graphic_matroid(complete_graph(4));
           const auto w = has_minor(m5, k4);
           c.expect(w.has_value(), "M(K4) minor found");
           if (w) {
             c.expect(is_independent(m5, w->contract) &&
                          is_independent(dual(m5), w->remove),
                      "contract set independent, delete set coindependent");
             c.expect(verifies(minor(m5, w->contract, w->remove), k4, w->iso.perm),
                      "witness verifies");
           }
         });
       }},
      {12, "Tutte polynomial of M(K5)", [](Check& c) {
         c.timed("total", 60.0, [&] {
           const Matroid m5 = graphic_matroid(complete_graph(5));
           const BivarPoly t = tutte_polynomial(m5);
           const std::vector<std::tuple<int, int, int>> visible = {
               {0, 6, 1},  {0, 5, 4},  {4, 0, 1},  {1, 3, 5},  {0, 4, 10}, {3, 0, 6},
               {2, 1, 10}, {1, 2, 15}, {0, 3, 15}, {2, 0, 11}, {1, 1, 20}, {0, 2, 15}};
           for (auto [i, j, coeff] : visible) {
             c.expect(t.coefficient(i, j) == coeff,
                      "coefficient of x^" + std::to_string(i) + " y^" + std::to_string(j));
           }
           c.expect(tutte_evaluate(m5, 1, 1) == 125, "T(1,1) = 125");
           c.expect(tutte_evaluate(m5, 2, 1) == 291, "T(2,1) = 291");
           c.expect(tutte_evaluate(m5, 2, 0) == 120, "T(2,0) = 120");
         });
       }},
      {13, "chromatic polynomial of K5", [](Check& c) {
         c.timed("total", 5.0, [&] {
           UniPoly expected = UniPoly::monomial(1);
           for (int r = 1; r <= 4; ++r) expected = expected * UniPoly({-r, 1});
           c.expect(chromatic_polynomial(complete_graph(5)) == expected,
                    "k(k-1)(k-2)(k-3)(k-4)");
         });
       }},
      {14, "greedy on the Fano matroid", [](Check& c) {
         c.timed("total", 1.0, [&] {
           const std::vector<double> w = {0, std::log(2.0), 4.0 / 3.0, 1, -4, 2, std::numbers::pi};
           c.expect(greedy(specific_matroid("fano"), w) == std::vector<int>{6, 5, 3},
                    "selection order 6, 5, 3");
         });
       }},
      {15, "matroid polytope of M(K4)", [](Check& c) {
         c.timed("total", 1.0, [&] {
           const auto p = polytope_vertices(graphic_matroid(complete_graph(4)));
           c.expect(p.ambient_dim == 6 && p.vertices.size() == 16 && p.dim == 5,
                    "ambient 6, 16 vertices, dimension 5");
         });
       }},
      {16, "Vamos matroid and its Chow ring", [](Check& c) {
         const Matroid v = specific_matroid("vamos");
         c.timed("flats", 30.0, [&] {
           std::size_t total = 0;
           for (std::size_t k : fvector(v)) total += k;
           c.expect(v.size() == 8 && v.basis_count() == 65 && v.rank() == 4 && total == 79,
                    "signature (8, 65, 4, 79)");
         });
         c.timed("Hilbert function", 600.0, [&] {
           const ChowPresentation chow = chow_presentation(v);
           c.expect(chow.variable_count() == 77, "77 variables");
           std::vector<std::size_t> h;
           for (int d = 0; d <= 3; ++d) h.push_back(chow_hilbert(chow, d));
           c.expect(h == std::vector<std::size_t>{1, 70, 70, 1}, "Hilbert function 1, 70, 70, 1");
         });
       }},
      {17, "randomized property suites", [](Check& c) {
         c.timed("total", 600.0, [&] {
           for (const auto& suite : properties::all_suites(200, 20261016)) {
             c.expect(suite.instances >= 200, suite.name + ": fewer than 200 instances");
             c.expect(suite.ok(), suite.name + ": " + std::to_string(suite.failures) +
                                      " failures, first: " + suite.first_failure);
           }
         });
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& criterion : criteria()) {
    Check check;
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool pass = check.failures().empty();
    failed += pass ? 0 : 1;
    std::printf("%s %2d  %-50s (%s)\n", pass ? "PASS" : "FAIL", criterion.id, criterion.title,
                check.timings().c_str());
    for (const std::string& f : check.failures()) std::printf("         - %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 17 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
