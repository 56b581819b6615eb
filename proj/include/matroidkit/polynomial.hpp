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

#ifndef MATROIDKIT_POLYNOMIAL_HPP
#define MATROIDKIT_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroidkit/exact_matrix.hpp"

namespace matroidkit {

/// Dense univariate polynomial with big-integer coefficients; coeffs()[i]
/// multiplies var^i. Trailing zeros are trimmed, so the zero polynomial has
/// no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coeffs);
  static UniPoly constant(const BigInt& c) { return UniPoly({c}); }
  /// c * var^power.
  static UniPoly monomial(int power, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int power) const;
  BigInt evaluate(const BigInt& at) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly&) const = default;

  /// Expanded form, highest power first: "k^3 - 3k^2 + 2k".
  std::string to_string(std::string_view var = "k") const;
  /// Product of linear factors for every integer root found, followed by any
  /// remaining cofactor: "k(k - 1)(k - 2)".
  std::string factored(std::string_view var = "k") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Sparse bivariate polynomial in x and y with big-integer coefficients.
/// Zero coefficients are never stored.
class BivarPoly {
 public:
  using Exponents = std::pair<int, int>;  // (power of x, power of y)

  BivarPoly() = default;
  static BivarPoly monomial(int x_power, int y_power, const BigInt& c = 1);

  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int x_power, int y_power) const;
  bool is_zero() const { return terms_.empty(); }

  BigInt evaluate(const BigInt& x, const BigInt& y) const;
  /// Replaces x and y by univariate polynomials in a common variable.
  UniPoly substitute(const UniPoly& x, const UniPoly& y) const;
  /// T(y, x).
  BivarPoly swapped() const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  bool operator==(const BivarPoly&) const = default;

  /// Terms by descending total degree, then descending power of x:
  /// "x^2 + y^2 + 2x + 2y", with products written "x^2*y".
  std::string to_string() const;

 private:
  std::map<Exponents, BigInt> terms_;
};

}  // namespace matroidkit

#endif  // MATROIDKIT_POLYNOMIAL_HPP
