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

#include "matroidkit/exact_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "matroidkit/error.hpp"
#include "matroidkit/modular.hpp"

namespace matroidkit {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error("malformed number '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error("malformed number '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::uint64_t reduce_mod(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const BigInt num = parse_integer(trim(t.substr(0, slash)), text);
  const BigInt den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error("field characteristic " + std::to_string(p) +
                " is not a prime below 2^31");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "q" : "p:" + std::to_string(p_);
}

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols,
                         const std::vector<Rational>& entries)
    : field_(field), rows_(rows), cols_(cols) {
  if (entries.size() != rows * cols) {
    throw Error("matrix of shape " + std::to_string(rows) + "x" +
                std::to_string(cols) + " needs " + std::to_string(rows * cols) +
                " entries, got " + std::to_string(entries.size()));
  }
  if (field_.is_rational()) {
    rational_ = entries;
    return;
  }
  const std::uint64_t p = field_.characteristic();
  modular_.reserve(entries.size());
  for (const Rational& q : entries) {
    const std::uint64_t num = reduce_mod(boost::multiprecision::numerator(q), p);
    const std::uint64_t den = reduce_mod(boost::multiprecision::denominator(q), p);
    if (den == 0) {
      throw Error("entry " + to_string(q) + " has a denominator divisible by " +
                  std::to_string(p));
    }
    modular_.push_back(mul_mod(num, inv_mod(den, p), p));
  }
}

std::string ExactMatrix::entry_string(std::size_t r, std::size_t c) const {
  const std::size_t k = r * cols_ + c;
  return field_.is_rational() ? to_string(rational_[k]) : std::to_string(modular_[k]);
}

std::string ExactMatrix::column_label(std::size_t c) const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ",";
    out += entry_string(r, c);
  }
  return out + "]";
}

std::size_t ExactMatrix::rank() const {
  std::vector<std::size_t> all(cols_);
  for (std::size_t c = 0; c < cols_; ++c) all[c] = c;
  return rank_of_columns(all);
}

std::size_t ExactMatrix::column_rank(GroundSubset columns) const {
  std::vector<std::size_t> picked;
  columns.for_each([&](int c) {
    if (static_cast<std::size_t>(c) >= cols_) throw Error("column index out of range");
    picked.push_back(static_cast<std::size_t>(c));
  });
  return rank_of_columns(picked);
}

std::size_t ExactMatrix::rank_of_columns(const std::vector<std::size_t>& columns) const {
  const std::size_t width = columns.size();
  std::size_t rank = 0;
  if (field_.is_rational()) {
    std::vector<Rational> a(rows_ * width);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < width; ++j) a[r * width + j] = rational_[r * cols_ + columns[j]];
    }
    for (std::size_t col = 0; col < width && rank < rows_; ++col) {
      std::size_t pivot = rank;
      while (pivot < rows_ && a[pivot * width + col] == 0) ++pivot;
      if (pivot == rows_) continue;
      for (std::size_t j = 0; j < width; ++j) std::swap(a[rank * width + j], a[pivot * width + j]);
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        if (a[r * width + col] == 0) continue;
        const Rational factor = a[r * width + col] / a[rank * width + col];
        for (std::size_t j = col; j < width; ++j) a[r * width + j] -= factor * a[rank * width + j];
      }
      ++rank;
    }
    return rank;
  }
  const std::uint64_t p = field_.characteristic();
  std::vector<std::uint64_t> a(rows_ * width);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < width; ++j) a[r * width + j] = modular_[r * cols_ + columns[j]];
  }
  for (std::size_t col = 0; col < width && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a[pivot * width + col] == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < width; ++j) std::swap(a[rank * width + j], a[pivot * width + j]);
    const std::uint64_t inv = inv_mod(a[rank * width + col], p);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (a[r * width + col] == 0) continue;
      const std::uint64_t factor = mul_mod(a[r * width + col], inv, p);
      for (std::size_t j = col; j < width; ++j) {
        a[r * width + j] = sub_mod(a[r * width + j], mul_mod(factor, a[rank * width + j], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace matroidkit
