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

#ifndef MATROIDKIT_GROUND_SUBSET_HPP
#define MATROIDKIT_GROUND_SUBSET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace matroidkit {

/// Largest supported ground set. Subsets are single machine words.
inline constexpr std::size_t kMaxGroundSize = 64;

/// A subset of {0, ..., n-1} stored as a 64-bit mask. The universe size is
/// not stored; operations that need it (complement, range checks) take it as
/// an argument.
///
/// The natural ordering compares masks as unsigned integers, which for sets of
/// equal cardinality is colexicographic order. All lists of subsets returned
/// by this library are sorted in this order.
class GroundSubset {
 public:
  constexpr GroundSubset() = default;
  constexpr explicit GroundSubset(std::uint64_t bits) : bits_(bits) {}
  GroundSubset(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= bit(e);
  }

  static GroundSubset of(std::span<const int> elements) {
    GroundSubset s;
    for (int e : elements) s.bits_ |= bit(e);
    return s;
  }
  /// {0, ..., n-1}.
  static constexpr GroundSubset full(std::size_t n) {
    return GroundSubset(n >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << n) - 1);
  }
  static constexpr GroundSubset singleton(int e) { return GroundSubset(bit(e)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool is_subset_of(GroundSubset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Smallest element; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  /// Largest element; undefined on the empty set.
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr GroundSubset with(int e) const { return GroundSubset(bits_ | bit(e)); }
  constexpr GroundSubset without(int e) const {
    return GroundSubset(bits_ & ~bit(e));
  }
  constexpr GroundSubset complement(std::size_t n) const {
    return GroundSubset(~bits_ & full(n).bits_);
  }

  constexpr GroundSubset operator|(GroundSubset o) const {
    return GroundSubset(bits_ | o.bits_);
  }
  constexpr GroundSubset operator&(GroundSubset o) const {
    return GroundSubset(bits_ & o.bits_);
  }
  /// Set difference.
  constexpr GroundSubset operator-(GroundSubset o) const {
    return GroundSubset(bits_ & ~o.bits_);
  }
  constexpr GroundSubset& operator|=(GroundSubset o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr GroundSubset& operator&=(GroundSubset o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const GroundSubset&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  /// Calls f(e) for every element in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  static constexpr std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

  std::uint64_t bits_ = 0;
};

/// Packs the elements of `s` that lie in `domain` into positions
/// 0..|domain|-1, preserving order (a software pext).
inline GroundSubset compress(GroundSubset s, GroundSubset domain) {
  std::uint64_t out = 0;
  int pos = 0;
  for (std::uint64_t d = domain.bits(); d != 0; d &= d - 1, ++pos) {
    if (s.contains(std::countr_zero(d))) out |= std::uint64_t{1} << pos;
  }
  return GroundSubset(out);
}

/// Inverse of compress: spreads bit i of `packed` onto the i-th element of
/// `domain`.
inline GroundSubset expand(GroundSubset packed, GroundSubset domain) {
  std::uint64_t out = 0;
  int pos = 0;
  for (std::uint64_t d = domain.bits(); d != 0; d &= d - 1, ++pos) {
    if (packed.contains(pos)) out |= d & (~d + 1);
  }
  return GroundSubset(out);
}

/// Visits every k-subset of {0..n-1} in increasing mask order (Gosper's hack).
/// The visitor returns false to stop early; returns false if stopped.
template <typename F>
bool for_each_k_subset(std::size_t n, int k, F&& visit) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return true;
  if (k == 0) return visit(GroundSubset{});
  const std::uint64_t limit_bit =
      n >= 64 ? 0 : (std::uint64_t{1} << n);
  std::uint64_t s = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    if (!visit(GroundSubset(s))) return false;
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) break;  // wrapped past the top word
    s = (((r ^ s) >> 2) / c) | r;
    if (limit_bit != 0 && s >= limit_bit) break;
  }
  return true;
}

/// Same as for_each_k_subset but restricted to subsets of `domain`, in
/// increasing mask order.
template <typename F>
bool for_each_k_subset_of(GroundSubset domain, int k, F&& visit) {
  return for_each_k_subset(
      static_cast<std::size_t>(domain.size()), k,
      [&](GroundSubset packed) { return visit(expand(packed, domain)); });
}

struct GroundSubsetHash {
  std::size_t operator()(GroundSubset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

}  // namespace matroidkit

#endif  // MATROIDKIT_GROUND_SUBSET_HPP
