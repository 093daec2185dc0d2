// Copyright 2026 The npl Authors
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

#ifndef NPL_ALGEBRA_MONOMIAL_HPP_
#define NPL_ALGEBRA_MONOMIAL_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace npl {

/// Exponent vector x1^e1 ... xv^ev. Ordering is lexicographic on the
/// exponent sequence, so x^2 > xy > y^2.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  static Monomial Variable(std::size_t num_vars, std::size_t i) {
    Monomial m(num_vars);
    m.exps_[i] = 1;
    return m;
  }

  std::size_t num_vars() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  /// True iff o divides *this.
  bool DivisibleBy(const Monomial& o) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] < o.exps_[i]) return false;
    }
    return true;
  }

  /// Renders as "x1^2*x3", or "1" for the empty product.
  std::string ToString() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// All monomials of exact degree d in v variables, descending lex.
std::vector<Monomial> MonomialsOfDegree(std::size_t num_vars, std::uint32_t degree);

}  // namespace npl

#endif  // NPL_ALGEBRA_MONOMIAL_HPP_
