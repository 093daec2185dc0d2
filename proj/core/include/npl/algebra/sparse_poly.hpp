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

#ifndef NPL_ALGEBRA_SPARSE_POLY_HPP_
#define NPL_ALGEBRA_SPARSE_POLY_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "npl/algebra/monomial.hpp"
#include "npl/algebra/poly_space.hpp"
#include "npl/algebra/prime_field.hpp"

namespace npl {

inline constexpr std::size_t kDefaultTermCap = std::size_t{1} << 20;

/// Multivariate polynomial over F_p stored as a map from monomial to a
/// nonzero canonical residue. Terms iterate in descending-lex order.
class SparsePoly {
 public:
  using TermMap = std::map<Monomial, std::uint64_t, std::greater<>>;

  SparsePoly(PrimeField field, std::size_t num_vars) : field_(field), num_vars_(num_vars) {}

  static SparsePoly Constant(PrimeField field, std::size_t num_vars, std::int64_t c);
  static SparsePoly Variable(PrimeField field, std::size_t num_vars, std::size_t i);
  /// Builds from (exponents, coefficient) pairs; repeated monomials accumulate.
  static SparsePoly FromTerms(PrimeField field, std::size_t num_vars,
                              const std::vector<std::pair<Monomial, std::int64_t>>& terms);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool IsZero() const noexcept { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  /// The zero polynomial counts as homogeneous.
  bool IsHomogeneous() const noexcept;
  FieldElement Coefficient(const Monomial& m) const;

  /// Accumulates c * m; the term disappears if the sum is zero.
  void AddTerm(const Monomial& m, std::uint64_t c);

  FieldElement Evaluate(std::span<const FieldElement> point) const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const { return Multiply(o, kDefaultTermCap); }
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);

  /// Throws Error(kTermCapExceeded) once the product holds more than term_cap terms.
  SparsePoly Multiply(const SparsePoly& o, std::size_t term_cap) const;
  SparsePoly Pow(std::uint64_t e, std::size_t term_cap = kDefaultTermCap) const;
  SparsePoly Scale(const FieldElement& c) const;

  std::string ToString() const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  void CheckCompatible(const SparsePoly& o) const;

  PrimeField field_;
  std::size_t num_vars_;
  TermMap terms_;
};

/// coeff(f): dense coordinates of f in the basis of index.space().
/// Throws Error(kSpaceMismatch) if f does not lie in the space.
std::vector<FieldElement> CoeffVector(const SparsePoly& f, const MonomialIndex& index);

/// Inverse of CoeffVector.
SparsePoly FromCoeffVector(std::span<const FieldElement> coeffs, const MonomialIndex& index,
                           const PrimeField& field);

/// True iff every term of f lies in the space.
bool FitsSpace(const SparsePoly& f, const PolySpace& space) noexcept;

}  // namespace npl

#endif  // NPL_ALGEBRA_SPARSE_POLY_HPP_
