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

#ifndef MATROIDKIT_SPARSE_ECHELON_HPP
#define MATROIDKIT_SPARSE_ECHELON_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "matroidkit/exact_matrix.hpp"
#include "matroidkit/modular.hpp"

namespace matroidkit {

/// GF(p) scalars for SparseEchelon.
struct PrimeFieldOps {
  using Value = std::uint64_t;
  std::uint64_t p;

  Value from_integer(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<Value>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  bool is_zero(const Value& v) const { return v == 0; }
  Value sub(const Value& a, const Value& b) const { return sub_mod(a, b, p); }
  Value mul(const Value& a, const Value& b) const { return mul_mod(a, b, p); }
  Value inv(const Value& a) const { return inv_mod(a, p); }
};

/// Rational scalars for SparseEchelon.
struct RationalOps {
  using Value = Rational;

  Value from_integer(std::int64_t v) const { return Value(v); }
  bool is_zero(const Value& v) const { return v == 0; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value inv(const Value& a) const { return 1 / a; }
};

/// Incremental row echelon form over sparse rows. Each inserted row is
/// reduced against existing pivots, leading column first, until its leading
/// column is free; it then becomes the pivot for that column. Pivot rows are
/// kept monic. The number of pivots is the rank of everything inserted.
template <typename Ops>
class SparseEchelon {
 public:
  using Value = typename Ops::Value;
  using Row = std::vector<std::pair<std::uint32_t, Value>>;  // sorted by column

  SparseEchelon(std::size_t columns, Ops ops)
      : ops_(std::move(ops)), pivot_of_(columns, -1) {}

  /// Returns true if the row was independent of the rows inserted so far.
  bool insert(Row row) {
    while (!row.empty()) {
      const std::uint32_t lead = row.front().first;
      const int pivot = pivot_of_[lead];
      if (pivot < 0) break;
      row = subtract_multiple(row, row.front().second, pivots_[pivot]);
    }
    if (row.empty()) return false;
    const Value scale = ops_.inv(row.front().second);
    for (auto& entry : row) entry.second = ops_.mul(entry.second, scale);
    pivot_of_[row.front().first] = static_cast<int>(pivots_.size());
    pivots_.push_back(std::move(row));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return pivot_of_.size(); }
  bool has_pivot(std::uint32_t column) const { return pivot_of_[column] >= 0; }

 private:
  // row - factor * pivot; the leading entries cancel.
  Row subtract_multiple(const Row& row, const Value& factor, const Row& pivot) const {
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first,
                         ops_.sub(ops_.from_integer(0), ops_.mul(factor, pivot[j].second)));
        ++j;
      } else {
        Value v = ops_.sub(row[i].second, ops_.mul(factor, pivot[j].second));
        if (!ops_.is_zero(v)) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  Ops ops_;
  std::vector<int> pivot_of_;
  std::vector<Row> pivots_;
};

}  // namespace matroidkit

#endif  // MATROIDKIT_SPARSE_ECHELON_HPP
