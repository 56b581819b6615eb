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

#include "matroidkit/polynomial.hpp"

#include <algorithm>

namespace matroidkit {

namespace {

std::string power_of(std::string_view var, int power) {
  if (power == 0) return "";
  std::string out(var);
  if (power > 1) out += "^" + std::to_string(power);
  return out;
}

// Appends c*monomial with sign handling; `first` tracks the leading term.
void append_term(std::string& out, const BigInt& c, const std::string& monomial,
                 bool& first) {
  const bool negative = c < 0;
  const BigInt magnitude = negative ? BigInt(-c) : c;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  first = false;
  if (monomial.empty()) {
    out += magnitude.str();
  } else {
    if (magnitude != 1) out += magnitude.str();
    out += monomial;
  }
}

// Divides p by (var - root) when root is a root; returns false otherwise.
bool divide_by_root(std::vector<BigInt>& p, const BigInt& root) {
  // Synthetic division, highest coefficient first.
  const std::size_t n = p.size();
  std::vector<BigInt> quotient(n - 1);
  BigInt carry = 0;
  for (std::size_t i = n; i-- > 1;) {
    carry = p[i] + carry * root;
    quotient[i - 1] = carry;
  }
  if (p[0] + carry * root != 0) return false;
  p = std::move(quotient);
  return true;
}

}  // namespace

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int power, const BigInt& c) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(power) + 1, 0);
  coeffs.back() = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UniPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

BigInt UniPoly::evaluate(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly out = *this;
  out += o;
  return out;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c != 0) append_term(out, c, power_of(var, i), first);
  }
  return out;
}

std::string UniPoly::factored(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::vector<BigInt> rest = coeffs_;
  std::vector<std::pair<BigInt, int>> roots;  // (root, multiplicity)
  int zero_roots = 0;
  while (rest.size() > 1 && rest.front() == 0) {
    rest.erase(rest.begin());
    ++zero_roots;
  }
  if (zero_roots) roots.emplace_back(0, zero_roots);
  // Integer roots divide the constant term; try small candidates in order
  // 1, -1, 2, -2, ... up to a fixed bound.
  const BigInt constant = rest.front();
  const BigInt bound = std::min<BigInt>(constant < 0 ? BigInt(-constant) : constant, 10000);
  for (BigInt r = 1; r <= bound && rest.size() > 1; ++r) {
    for (const BigInt& root : {r, BigInt(-r)}) {
      if (constant % root != 0) continue;
      int multiplicity = 0;
      while (rest.size() > 1 && divide_by_root(rest, root)) ++multiplicity;
      if (multiplicity) roots.emplace_back(root, multiplicity);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    const BigInt ma = a.first < 0 ? BigInt(-a.first) : a.first;
    const BigInt mb = b.first < 0 ? BigInt(-b.first) : b.first;
    return ma != mb ? ma < mb : a.first > b.first;
  });

  std::string out;
  const UniPoly cofactor{rest};
  if (roots.empty()) return cofactor.to_string(var);
  if (cofactor.degree() == 0) {
    const BigInt& lead = cofactor.coeffs().front();
    if (lead == -1) {
      out += "-";
    } else if (lead != 1) {
      out += lead.str();
    }
  } else {
    out += "(" + cofactor.to_string(var) + ")";
  }
  for (const auto& [root, multiplicity] : roots) {
    std::string factor;
    if (root == 0) {
      factor = std::string(var);
    } else {
      const BigInt magnitude = root < 0 ? BigInt(-root) : root;
      factor = "(" + std::string(var) + (root > 0 ? " - " : " + ") + magnitude.str() + ")";
    }
    out += factor;
    if (multiplicity > 1) out += "^" + std::to_string(multiplicity);
  }
  if (out.empty() || out == "-") out += "1";
  return out;
}

BivarPoly BivarPoly::monomial(int x_power, int y_power, const BigInt& c) {
  BivarPoly p;
  if (c != 0) p.terms_[{x_power, y_power}] = c;
  return p;
}

BigInt BivarPoly::coefficient(int x_power, int y_power) const {
  auto it = terms_.find({x_power, y_power});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt BivarPoly::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    total += c * boost::multiprecision::pow(x, static_cast<unsigned>(e.first)) *
             boost::multiprecision::pow(y, static_cast<unsigned>(e.second));
  }
  return total;
}

UniPoly BivarPoly::substitute(const UniPoly& x, const UniPoly& y) const {
  UniPoly total;
  for (const auto& [e, c] : terms_) {
    UniPoly term = UniPoly::constant(c);
    for (int i = 0; i < e.first; ++i) term = term * x;
    for (int j = 0; j < e.second; ++j) term = term * y;
    total += term;
  }
  return total;
}

BivarPoly BivarPoly::swapped() const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) out.terms_[{e.second, e.first}] = c;
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    BigInt& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly out = *this;
  out += o;
  return out;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      out += monomial(a.first + b.first, a.second + b.second, ca * cb);
    }
  }
  return out;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    return da != db ? da > db : a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    std::string monomial = power_of("x", e.first);
    const std::string ypart = power_of("y", e.second);
    if (!monomial.empty() && !ypart.empty()) monomial += "*";
    monomial += ypart;
    append_term(out, c, monomial, first);
  }
  return out;
}

}  // namespace matroidkit
