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

#ifndef NPL_PIT_GENERATOR_HPP_
#define NPL_PIT_GENERATOR_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "npl/algebra/poly_space.hpp"
#include "npl/algebra/prime_field.hpp"
#include "npl/circuits/determinant.hpp"
#include "npl/meta/meta_polynomial.hpp"
#include "npl/pit/engines.hpp"

namespace npl {

/// A polynomial map F_p^s -> F_p^N into the coefficient space of target.
/// Every output coordinate has degree at most coordinate_degree in the seed.
class Generator {
 public:
  using Map = std::function<std::vector<std::uint64_t>(std::span<const std::uint64_t>)>;

  Generator(PrimeField field, std::size_t seed_length, PolySpace target,
            std::uint64_t coordinate_degree, Map map);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t seed_length() const noexcept { return seed_length_; }
  const PolySpace& target() const noexcept { return target_; }
  std::uint64_t dimension() const noexcept { return dimension_; }
  std::uint64_t coordinate_degree() const noexcept { return coordinate_degree_; }

  /// Throws Error(kArityMismatch) on a seed of the wrong length.
  std::vector<FieldElement> Evaluate(std::span<const FieldElement> seed) const;
  std::vector<std::uint64_t> EvaluateRaw(std::span<const std::uint64_t> seed) const;

 private:
  PrimeField field_;
  std::size_t seed_length_;
  PolySpace target_;
  std::uint64_t dimension_;
  std::uint64_t coordinate_degree_;
  Map map_;
};

/// Reads an n^2 x n^2 seed matrix (row-major, n^4 entries) as the
/// homogeneous map L: entry (i, j) of the n x n matrix is the linear form
/// whose coefficients are seed row i*n + j.
AffineMatrixMap SeedToMatrix(std::size_t n, const PrimeField& field, std::span<const std::uint64_t> seed);

/// L |-> coeff(det_n(L(x))) with s = n^4 and target Poly^n(n^2).
/// Throws Error(kTermCapExceeded) for n above kMaxDetSide.
Generator DetCoeffGenerator(std::size_t n, const PrimeField& field,
                            std::size_t term_cap = kDefaultTermCap);

/// SZ test of T o G in the seed variables; the witness is a seed.
/// Throws Error(kSpaceMismatch) unless T.space() == G.target().
PitVerdict GeneratorPit(const MetaPolynomial& t, const Generator& g, std::uint64_t trials,
                        std::uint64_t seed, unsigned jobs = 1);

}  // namespace npl

#endif  // NPL_PIT_GENERATOR_HPP_
