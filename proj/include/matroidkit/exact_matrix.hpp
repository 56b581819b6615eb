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

#ifndef MATROIDKIT_EXACT_MATRIX_HPP
#define MATROIDKIT_EXACT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matroidkit/ground_subset.hpp"

namespace matroidkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "12", "-3" or "2/3". Throws Error on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

bool is_prime(std::uint64_t p);

/// The coefficient field of an ExactMatrix: the rationals or GF(p) for a
/// prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws Error unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  /// "q" or "p:<prime>", the spelling used on the command line.
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Dense matrix with exact entries. Rank computations are exact Gaussian
/// elimination over the declared field.
class ExactMatrix {
 public:
  /// Row-major entries. Over GF(p) every entry is reduced modulo p; a
  /// fraction is accepted when its denominator is invertible.
  ExactMatrix(Field field, std::size_t rows, std::size_t cols,
              const std::vector<Rational>& entries);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Entry text: "2/3" over Q, the reduced residue over GF(p).
  std::string entry_string(std::size_t r, std::size_t c) const;
  /// Column rendered as "[a,b,...]".
  std::string column_label(std::size_t c) const;

  std::size_t rank() const;
  /// Rank of the submatrix formed by the given columns.
  std::size_t column_rank(GroundSubset columns) const;

 private:
  std::size_t rank_of_columns(const std::vector<std::size_t>& columns) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> rational_;    // used over Q
  std::vector<std::uint64_t> modular_;  // used over GF(p)
};

}  // namespace matroidkit

#endif  // MATROIDKIT_EXACT_MATRIX_HPP
