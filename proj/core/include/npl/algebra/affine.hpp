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

#ifndef NPL_ALGEBRA_AFFINE_HPP_
#define NPL_ALGEBRA_AFFINE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "npl/algebra/prime_field.hpp"
#include "npl/algebra/sparse_poly.hpp"

namespace npl {

/// c_1 x_1 + ... + c_v x_v + c_0.
class AffineForm {
 public:
  AffineForm(PrimeField field, std::vector<std::uint64_t> coeffs, std::uint64_t constant = 0);
  /// Convenience for literals; values are reduced mod p.
  static AffineForm FromInts(PrimeField field, const std::vector<std::int64_t>& coeffs,
                             std::int64_t constant = 0);
  static AffineForm Variable(PrimeField field, std::size_t num_vars, std::size_t i);
  static AffineForm ConstantForm(PrimeField field, std::size_t num_vars, std::int64_t c);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return coeffs_.size(); }
  std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
  std::uint64_t constant() const noexcept { return constant_; }
  bool IsHomogeneous() const noexcept { return constant_ == 0; }

  FieldElement Evaluate(std::span<const FieldElement> point) const;
  SparsePoly ToPoly() const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;

 private:
  PrimeField field_;
  std::vector<std::uint64_t> coeffs_;
  std::uint64_t constant_;
};

/// Projection g(l_1(x), ..., l_m(x)). The forms must number g.num_vars()
/// and share one variable count and the field of g.
SparsePoly SubstituteAffine(const SparsePoly& g, std::span<const AffineForm> forms,
                            std::size_t term_cap = kDefaultTermCap);

}  // namespace npl

#endif  // NPL_ALGEBRA_AFFINE_HPP_
