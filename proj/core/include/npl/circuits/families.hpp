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

#ifndef NPL_CIRCUITS_FAMILIES_HPP_
#define NPL_CIRCUITS_FAMILIES_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "npl/algebra/affine.hpp"
#include "npl/algebra/poly_space.hpp"
#include "npl/algebra/sparse_poly.hpp"
#include "npl/circuits/determinant.hpp"

namespace npl {

/// Sum over products of the given forms. All forms must share the field
/// and variable count passed in.
SparsePoly SpsBuild(PrimeField field, std::size_t num_vars,
                    const std::vector<std::vector<AffineForm>>& products,
                    std::size_t term_cap = kDefaultTermCap);

/// l^e * f.
SparsePoly PadPolynomial(const SparsePoly& f, const AffineForm& l, std::uint32_t e,
                         std::size_t term_cap = kDefaultTermCap);

enum class FamilyClass { kDetProjection, kSps, kSparse, kSquares, kFullSpace };

std::string ToString(FamilyClass c);
FamilyClass FamilyClassFromString(const std::string& s);

/// A sampleable easy class inside a fixed PolySpace.
///
/// Homogeneous spaces draw linear forms, at-most spaces draw affine forms.
///  - det-projection: det_n(L(x)), L an n x n matrix of forms; needs degree == n.
///  - sps: sum of top_fan_in products of space.degree forms.
///  - sparse: at most sparsity monomials of the space with free coefficients.
///  - squares: l(x)^2; needs degree == 2.
///  - full-space: every coefficient free.
struct FamilyDescriptor {
  FamilyClass class_id = FamilyClass::kFullSpace;
  std::uint32_t n = 0;  // matrix side for det-projection
  PolySpace space;
  std::uint32_t top_fan_in = 0;  // sps
  std::uint32_t sparsity = 0;    // sparse

  static FamilyDescriptor DetProjection(std::uint32_t n, PolySpace space) {
    return {FamilyClass::kDetProjection, n, space, 0, 0};
  }
  static FamilyDescriptor Sps(std::uint32_t top_fan_in, PolySpace space) {
    return {FamilyClass::kSps, 0, space, top_fan_in, 0};
  }
  static FamilyDescriptor Sparse(std::uint32_t sparsity, PolySpace space) {
    return {FamilyClass::kSparse, 0, space, 0, sparsity};
  }
  static FamilyDescriptor Squares(PolySpace space) { return {FamilyClass::kSquares, 0, space, 0, 0}; }
  static FamilyDescriptor FullSpace(PolySpace space) {
    return {FamilyClass::kFullSpace, 0, space, 0, 0};
  }

  /// Throws Error(kDescriptorInvalid) when parameters and space disagree.
  void Validate() const;
  /// Field scalars per member (excludes the sparse support choice).
  std::uint64_t ScalarCount() const;
  std::string ToString() const;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

struct DetWitness {
  AffineMatrixMap matrix;
};
struct SpsWitness {
  std::vector<std::vector<AffineForm>> products;
};
struct SparseWitness {
  std::vector<std::uint64_t> support;  // ranks in the space's MonomialIndex
  std::vector<std::uint64_t> coeffs;
};
struct SquaresWitness {
  AffineForm form;
};
struct FullWitness {
  std::vector<std::uint64_t> coeffs;
};

using FamilyWitness = std::variant<DetWitness, SpsWitness, SparseWitness, SquaresWitness, FullWitness>;

/// A family member together with the construction that produced it.
struct FamilyMember {
  SparsePoly poly;
  FamilyWitness witness;
};

/// Maps parameters to a member: the family's generator. `scalars` has
/// ScalarCount() canonical residues; the support is only read for sparse.
FamilyMember MemberFromParameters(const FamilyDescriptor& desc, const PrimeField& field,
                                  std::span<const std::uint64_t> scalars,
                                  std::span<const std::uint64_t> support = {},
                                  std::size_t term_cap = kDefaultTermCap);

/// Draws every free scalar i.i.d. uniform over F_p; deterministic in seed.
/// The result is re-validated against the descriptor before return.
FamilyMember SampleFamily(const FamilyDescriptor& desc, const PrimeField& field, std::uint64_t seed,
                          std::size_t term_cap = kDefaultTermCap);

/// Re-expands the witness and checks it reproduces the polynomial inside
/// the declared space.
bool ValidateMember(const FamilyDescriptor& desc, const FamilyMember& member,
                    std::size_t term_cap = kDefaultTermCap);

/// Number of parameter choices, saturating at UINT64_MAX.
std::uint64_t ParameterGridSize(const FamilyDescriptor& desc, const PrimeField& field);

/// Visits every parameter choice in a fixed order until the visitor
/// returns false. Throws Error(kEnumerationBudgetExceeded) up front if the
/// grid is larger than budget. Returns the number of members visited.
std::uint64_t ForEachMember(const FamilyDescriptor& desc, const PrimeField& field,
                            std::uint64_t budget,
                            const std::function<bool(const FamilyMember&)>& visit,
                            std::size_t term_cap = kDefaultTermCap);

}  // namespace npl

#endif  // NPL_CIRCUITS_FAMILIES_HPP_
