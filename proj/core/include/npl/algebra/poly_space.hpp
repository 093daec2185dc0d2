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

#ifndef NPL_ALGEBRA_POLY_SPACE_HPP_
#define NPL_ALGEBRA_POLY_SPACE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "npl/algebra/monomial.hpp"

namespace npl {

enum class SpaceMode { kHomogeneous, kAtMost };

/// Binomial coefficient; throws Error(kDimensionCapExceeded) on overflow.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

/// Poly^d(v) (homogeneous) or Poly^{<=d}(v) (at-most).
struct PolySpace {
  std::uint32_t num_vars = 1;
  std::uint32_t degree = 0;
  SpaceMode mode = SpaceMode::kHomogeneous;

  static PolySpace Homogeneous(std::uint32_t v, std::uint32_t d) {
    return {v, d, SpaceMode::kHomogeneous};
  }
  static PolySpace AtMost(std::uint32_t v, std::uint32_t d) { return {v, d, SpaceMode::kAtMost}; }

  /// N = C(v+d-1, d) or C(v+d, d).
  std::uint64_t Dimension() const;
  bool Contains(const Monomial& m) const noexcept;
  /// "v:d" for homogeneous, "v:<=d" for at-most.
  std::string ToString() const;

  friend bool operator==(const PolySpace&, const PolySpace&) = default;
};

/// Bijection between the monomial basis of a PolySpace and [0, N).
///
/// Homogeneous spaces are ordered descending-lex. At-most spaces place the
/// degree-d block first, then d-1, ..., 0, each block descending-lex, so
/// the homogeneous space is a prefix of the at-most one.
class MonomialIndex {
 public:
  explicit MonomialIndex(PolySpace space);

  const PolySpace& space() const noexcept { return space_; }
  std::uint64_t Dimension() const noexcept { return dimension_; }

  /// Throws Error(kSpaceMismatch) if m is not in the space.
  std::uint64_t Rank(const Monomial& m) const;
  /// Throws Error(kSpaceMismatch) if index >= N.
  Monomial Unrank(std::uint64_t index) const;

  /// Every basis monomial in rank order.
  std::vector<Monomial> Basis() const;

 private:
  std::uint64_t RankWithinDegree(const Monomial& m) const;
  Monomial UnrankWithinDegree(std::uint64_t index, std::uint32_t degree) const;
  std::uint64_t BlockOffset(std::uint32_t degree) const;

  PolySpace space_;
  std::uint64_t dimension_;
};

}  // namespace npl

#endif  // NPL_ALGEBRA_POLY_SPACE_HPP_
