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

#ifndef NPL_CIRCUITS_DETERMINANT_HPP_
#define NPL_CIRCUITS_DETERMINANT_HPP_

#include <cstdint>
#include <vector>

#include "npl/algebra/affine.hpp"
#include "npl/algebra/sparse_poly.hpp"
#include "npl/circuits/circuit.hpp"

namespace npl {

/// An n x n matrix whose entries are affine forms in v variables, stored
/// row-major. This is the L in det_n(L(x)).
class AffineMatrixMap {
 public:
  AffineMatrixMap(std::size_t n, std::vector<AffineForm> entries);

  /// Entry (i, j) is variable x_{i*n + j}: the generic n x n matrix.
  static AffineMatrixMap Generic(PrimeField field, std::size_t n);

  std::size_t side() const noexcept { return n_; }
  std::size_t num_vars() const noexcept { return entries_.front().num_vars(); }
  const PrimeField& field() const noexcept { return entries_.front().field(); }
  const AffineForm& at(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
  const std::vector<AffineForm>& entries() const noexcept { return entries_; }
  /// True iff every constant term is zero.
  bool IsHomogeneous() const noexcept;

  friend bool operator==(const AffineMatrixMap&, const AffineMatrixMap&) = default;

 private:
  std::size_t n_;
  std::vector<AffineForm> entries_;
};

/// Largest matrix side accepted by DetProjection.
inline constexpr std::size_t kMaxDetSide = 6;

/// det(L(x)) expanded as a polynomial, computed division-free.
SparsePoly DetProjection(const AffineMatrixMap& l, std::size_t term_cap = kDefaultTermCap);

/// Circuit for det(L(x)); formal degree at most the side length.
Circuit DetProjectionCircuit(const AffineMatrixMap& l);

/// Ring adaptor that threads a term cap through polynomial products.
struct PolyRingOps {
  PrimeField field;
  std::size_t num_vars;
  std::size_t term_cap = kDefaultTermCap;

  SparsePoly Add(const SparsePoly& a, const SparsePoly& b) const { return a + b; }
  SparsePoly Mul(const SparsePoly& a, const SparsePoly& b) const { return a.Multiply(b, term_cap); }
  SparsePoly Neg(const SparsePoly& a) const { return -a; }
  SparsePoly One() const { return SparsePoly::Constant(field, num_vars, 1); }
};

/// Ring adaptor that emits gates.
struct WireRingOps {
  CircuitBuilder* builder;

  Wire Add(Wire a, Wire b) const { return builder->Add(a, b); }
  Wire Mul(Wire a, Wire b) const { return builder->Mul(a, b); }
  Wire Neg(Wire a) const { return builder->Neg(a); }
  Wire One() const { return builder->Constant(1); }
};

}  // namespace npl

#endif  // NPL_CIRCUITS_DETERMINANT_HPP_
