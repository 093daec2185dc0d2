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

#ifndef NPL_META_COEFF_MATRIX_HPP_
#define NPL_META_COEFF_MATRIX_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "npl/algebra/monomial.hpp"
#include "npl/algebra/poly_space.hpp"
#include "npl/algebra/sparse_poly.hpp"

namespace npl {

inline constexpr std::size_t kDefaultDimensionCap = 2048;
/// Symbolic entry forms are only materialized for spaces up to this size.
inline constexpr std::uint64_t kSymbolicSpaceLimit = 512;

/// Sparse linear form sum_j coeff_j * t_{var_j} in the meta-variables.
using MetaLinearForm = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

/// A matrix M(f) of shifted partial derivatives. Row r is the polynomial
/// x^beta * d^alpha f for row_ops[r] = (beta, alpha); column c is the
/// coefficient of col_monomials[c].
struct CoeffMatrix {
  PrimeField field;
  std::vector<std::pair<Monomial, Monomial>> row_ops;
  std::vector<Monomial> col_monomials;
  std::vector<std::uint64_t> entries;  // row-major, canonical residues
  /// Present when built symbolically: entry (r, c) as a linear form in
  /// the coefficients of f.
  std::optional<std::vector<MetaLinearForm>> symbolic;

  std::size_t rows() const noexcept { return row_ops.size(); }
  std::size_t cols() const noexcept { return col_monomials.size(); }
  std::uint64_t at(std::size_t r, std::size_t c) const { return entries.at(r * cols() + c); }
};

/// d^alpha f with multinomial factors.
SparsePoly PartialDerivative(const SparsePoly& f, const Monomial& alpha);

/// Rows indexed by degree-k derivative operators (descending lex), columns by
/// degree-(d-k) monomials. The degree is taken from f, which must be
/// nonzero and homogeneous; use the explicit-degree overload otherwise.
///
/// Throws Error(kCharacteristicTooSmall) when p <= d, Error(kOrderOutOfRange)
/// when k > d, Error(kSpaceMismatch) when f is not homogeneous of degree d.
CoeffMatrix PartialsMatrix(const SparsePoly& f, std::uint32_t k);
CoeffMatrix PartialsMatrix(const SparsePoly& f, std::uint32_t degree, std::uint32_t k);

/// Rows indexed by (shift monomial of degree `shift`, derivative of order
/// k), shift-major; columns by degree-(d-k+shift) monomials.
/// Throws Error(kDimensionCapExceeded) when either side exceeds dimension_cap.
CoeffMatrix ShiftedPartialsMatrix(const SparsePoly& f, std::uint32_t degree, std::uint32_t k,
                                  std::uint32_t shift,
                                  std::size_t dimension_cap = kDefaultDimensionCap);

/// The same matrix with entries as linear forms in coeff(f) for f in
/// Poly^d(v). Numeric entries are left zero until Instantiate().
/// Throws Error(kDimensionCapExceeded) above kSymbolicSpaceLimit.
CoeffMatrix SymbolicShiftedPartials(const PrimeField& field, const PolySpace& space,
                                    std::uint32_t k, std::uint32_t shift,
                                    std::size_t dimension_cap = kDefaultDimensionCap);

/// Fills numeric entries by evaluating the symbolic forms at cv.
CoeffMatrix Instantiate(const CoeffMatrix& symbolic, std::span<const FieldElement> cv);

}  // namespace npl

#endif  // NPL_META_COEFF_MATRIX_HPP_
