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

#include "matroidkit/algebra.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>

#include "matroidkit/error.hpp"
#include "matroidkit/exact_matrix.hpp"
#include "matroidkit/sparse_echelon.hpp"

namespace matroidkit {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Degree-d monomials in `vars` variables, written as nondecreasing variable
// sequences. Their index is the position in lexicographic order of those
// sequences, i.e. lex order of monomials with x_0 > x_1 > ... .
class MonomialSpace {
 public:
  MonomialSpace(std::size_t vars, int degree) : vars_(vars), degree_(degree) {
    // tails[len][v]: sequences of length len with entries in [v, vars).
    std::vector<std::vector<std::uint64_t>> tails(
        static_cast<std::size_t>(degree) + 1, std::vector<std::uint64_t>(vars + 1, 0));
    for (std::size_t v = 0; v <= vars; ++v) tails[0][v] = 1;
    for (int len = 1; len <= degree; ++len) {
      for (std::size_t v = vars; v-- > 0;) {
        tails[len][v] = saturating_add(tails[len][v + 1], tails[len - 1][v]);
      }
    }
    count_ = degree == 0 ? 1 : tails[degree][0];
    // before[len][v]: sequences of length len that start below v, all
    // entries >= 0, i.e. sum over v' < v of tails[len - 1][v'].
    before_.assign(static_cast<std::size_t>(degree) + 1,
                   std::vector<std::uint64_t>(vars + 1, 0));
    for (int len = 1; len <= degree; ++len) {
      for (std::size_t v = 0; v < vars; ++v) {
        before_[len][v + 1] = saturating_add(before_[len][v], tails[len - 1][v]);
      }
    }
  }

  std::uint64_t count() const { return count_; }

  std::uint64_t index(std::span<const int> seq) const {
    std::uint64_t idx = 0;
    int prev = 0;
    for (int i = 0; i < degree_; ++i) {
      const auto& row = before_[static_cast<std::size_t>(degree_ - i)];
      idx += row[static_cast<std::size_t>(seq[i])] - row[static_cast<std::size_t>(prev)];
      prev = seq[i];
    }
    return idx;
  }

  /// Visits sequences in index order.
  template <typename F>
  void for_each(F&& visit) const {
    std::vector<int> seq(static_cast<std::size_t>(degree_));
    walk(seq, 0, 0, visit);
  }

 private:
  template <typename F>
  void walk(std::vector<int>& seq, int pos, int start, F& visit) const {
    if (pos == degree_) {
      visit(std::span<const int>(seq));
      return;
    }
    for (int v = start; v < static_cast<int>(vars_); ++v) {
      seq[static_cast<std::size_t>(pos)] = v;
      walk(seq, pos + 1, v, visit);
    }
  }

  std::size_t vars_;
  int degree_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<std::uint64_t>> before_;
};

std::vector<int> with_variable(std::span<const int> seq, int v) {
  std::vector<int> out(seq.begin(), seq.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

std::uint32_t checked_column(std::uint64_t index) {
  return static_cast<std::uint32_t>(index);
}

void check_column_count(std::uint64_t count) {
  if (count >= std::numeric_limits<std::uint32_t>::max()) {
    throw Error("graded piece has too many monomials for elimination");
  }
}

template <typename Ops>
std::size_t hilbert_full(const ChowPresentation& chow, int d, const Ops& ops) {
  const std::size_t vars = chow.variable_count();
  const MonomialSpace columns(vars, d);
  check_column_count(columns.count());
  SparseEchelon<Ops> echelon(static_cast<std::size_t>(columns.count()), ops);
  using Row = typename SparseEchelon<Ops>::Row;

  // Multiples of x_F x_G are single monomials.
  if (d >= 2) {
    MonomialSpace(vars, d - 2).for_each([&](std::span<const int> m) {
      for (auto [a, b] : chow.quadrics) {
        const std::vector<int> product = with_variable(with_variable(m, a), b);
        Row row;
        row.emplace_back(checked_column(columns.index(product)), ops.from_integer(1));
        echelon.insert(std::move(row));
      }
    });
  }
  MonomialSpace(vars, d - 1).for_each([&](std::span<const int> m) {
    for (const auto& form : chow.linear) {
      Row row;
      row.reserve(form.size());
      for (auto [v, c] : form) {
        row.emplace_back(checked_column(columns.index(with_variable(m, v))),
                         ops.from_integer(c));
      }
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      echelon.insert(std::move(row));
    }
  });
  return static_cast<std::size_t>(columns.count()) - echelon.rank();
}

class ChainMonomials {
 public:
  explicit ChainMonomials(const ChowPresentation& chow) : vars_(chow.variable_count()) {
    comparable_.assign(vars_ * vars_, 0);
    for (std::size_t a = 0; a < vars_; ++a) {
      for (std::size_t b = 0; b < vars_; ++b) {
        comparable_[a * vars_ + b] = chow.flats[a].is_subset_of(chow.flats[b]) ||
                                     chow.flats[b].is_subset_of(chow.flats[a]);
      }
    }
  }

  bool is_chain(std::span<const int> seq) const {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = i + 1; j < seq.size(); ++j) {
        if (!comparable_[static_cast<std::size_t>(seq[i]) * vars_ +
                         static_cast<std::size_t>(seq[j])]) {
          return false;
        }
      }
    }
    return true;
  }

  /// Chain-supported monomials of degree d, in lex order.
  std::vector<std::vector<int>> of_degree(int d) const {
    std::vector<std::vector<int>> out;
    std::vector<int> seq;
    extend(seq, d, 0, out);
    return out;
  }

 private:
  void extend(std::vector<int>& seq, int d, int start,
              std::vector<std::vector<int>>& out) const {
    if (static_cast<int>(seq.size()) == d) {
      out.push_back(seq);
      return;
    }
    for (int v = start; v < static_cast<int>(vars_); ++v) {
      bool ok = true;
      for (int u : seq) {
        if (!comparable_[static_cast<std::size_t>(u) * vars_ + static_cast<std::size_t>(v)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      seq.push_back(v);
      extend(seq, d, v, out);
      seq.pop_back();
    }
  }

  std::size_t vars_;
  std::vector<char> comparable_;
};

template <typename Ops>
std::size_t hilbert_chain(const ChowPresentation& chow, int d, const Ops& ops) {
  const std::size_t vars = chow.variable_count();
  const ChainMonomials chains(chow);
  const MonomialSpace space(vars, d);
  const auto columns = chains.of_degree(d);
  check_column_count(columns.size());
  std::unordered_map<std::uint64_t, std::uint32_t> column_of;
  column_of.reserve(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    column_of.emplace(space.index(columns[i]), static_cast<std::uint32_t>(i));
  }
  SparseEchelon<Ops> echelon(columns.size(), ops);
  using Row = typename SparseEchelon<Ops>::Row;
  // A multiple of a non-chain monomial lies entirely in I2, so only chain
  // monomials need to be multiplied by the linear forms.
  for (const auto& m : chains.of_degree(d - 1)) {
    for (const auto& form : chow.linear) {
      Row row;
      for (auto [v, c] : form) {
        auto it = column_of.find(space.index(with_variable(m, v)));
        if (it != column_of.end()) row.emplace_back(it->second, ops.from_integer(c));
      }
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      echelon.insert(std::move(row));
    }
  }
  return columns.size() - echelon.rank();
}

template <typename Ops>
std::size_t hilbert_with(const ChowPresentation& chow, int d,
                         ChowOptions::Method method, const Ops& ops) {
  return method == ChowOptions::Method::kFull ? hilbert_full(chow, d, ops)
                                              : hilbert_chain(chow, d, ops);
}

}  // namespace

PolytopeVertices polytope_vertices(const Matroid& m) {
  PolytopeVertices out;
  out.ambient_dim = m.size();
  for (GroundSubset b : m.bases()) {
    std::vector<int> v(m.size(), 0);
    b.for_each([&](int e) { v[static_cast<std::size_t>(e)] = 1; });
    out.vertices.push_back(std::move(v));
  }
  if (out.vertices.size() > 1 && m.size() > 0) {
    const auto& origin = out.vertices.front();
    std::vector<Rational> entries;
    entries.reserve((out.vertices.size() - 1) * m.size());
    for (std::size_t k = 1; k < out.vertices.size(); ++k) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        entries.emplace_back(out.vertices[k][i] - origin[i]);
      }
    }
    const ExactMatrix differences(Field::rationals(), out.vertices.size() - 1, m.size(),
                                  entries);
    out.dim = differences.rank();
  }
  return out;
}

ChowPresentation chow_presentation(const Matroid& m) {
  if (!loops(m).empty()) {
    throw Error("the cohomology ring is only defined for loopless matroids");
  }
  ChowPresentation chow;
  chow.ground_size = m.size();
  chow.rank = m.rank();
  const auto& levels = m.flats();
  for (int k = 1; k < m.rank(); ++k) {
    std::vector<GroundSubset> level = levels[static_cast<std::size_t>(k)];
    std::sort(level.begin(), level.end(), [](GroundSubset a, GroundSubset b) {
      return a.elements() < b.elements();
    });
    chow.flats.insert(chow.flats.end(), level.begin(), level.end());
  }
  const int vars = static_cast<int>(chow.flats.size());
  for (int i = 1; i < static_cast<int>(m.size()); ++i) {
    ChowPresentation::LinearForm form;
    for (int v = 0; v < vars; ++v) {
      const GroundSubset f = chow.flats[static_cast<std::size_t>(v)];
      const std::int64_t c = (f.contains(0) ? 1 : 0) - (f.contains(i) ? 1 : 0);
      if (c != 0) form.emplace_back(v, c);
    }
    chow.linear.push_back(std::move(form));
  }
  for (int a = 0; a < vars; ++a) {
    for (int b = a + 1; b < vars; ++b) {
      const GroundSubset fa = chow.flats[static_cast<std::size_t>(a)];
      const GroundSubset fb = chow.flats[static_cast<std::size_t>(b)];
      if (!fa.is_subset_of(fb) && !fb.is_subset_of(fa)) chow.quadrics.emplace_back(a, b);
    }
  }
  return chow;
}

std::size_t chow_hilbert(const ChowPresentation& chow, int degree,
                         const ChowOptions& options) {
  if (degree < 0 || degree > chow.rank - 1) {
    throw Error("degree " + std::to_string(degree) + " outside [0, " +
                std::to_string(chow.rank - 1) + "]");
  }
  if (degree == 0) return 1;
  if (options.exact) return hilbert_with(chow, degree, options.method, RationalOps{});
  if (options.prime >= (std::uint64_t{1} << 32) || !is_prime(options.prime)) {
    throw Error("elimination prime must be a prime below 2^32");
  }
  return hilbert_with(chow, degree, options.method, PrimeFieldOps{options.prime});
}

std::size_t chow_hilbert(const Matroid& m, int degree, const ChowOptions& options) {
  return chow_hilbert(chow_presentation(m), degree, options);
}

std::vector<std::size_t> chow_hilbert_function(const Matroid& m,
                                               const ChowOptions& options) {
  const ChowPresentation chow = chow_presentation(m);
  std::vector<std::size_t> out;
  for (int d = 0; d < m.rank(); ++d) out.push_back(chow_hilbert(chow, d, options));
  return out;
}

}  // namespace matroidkit
