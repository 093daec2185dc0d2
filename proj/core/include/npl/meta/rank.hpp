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

#ifndef NPL_META_RANK_HPP_
#define NPL_META_RANK_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "npl/algebra/prime_field.hpp"
#include "npl/meta/coeff_matrix.hpp"

namespace npl {

/// Rank over F_p by Gaussian elimination. Entries are reduced mod p first.
std::size_t RankModP(const PrimeField& field, std::size_t rows, std::size_t cols,
                     std::vector<std::uint64_t> entries);
std::size_t RankModP(const CoeffMatrix& m);

/// Determinant of an n x n row-major matrix over F_p.
std::uint64_t DeterminantModP(const PrimeField& field, std::size_t n,
                              std::vector<std::uint64_t> entries);

}  // namespace npl

#endif  // NPL_META_RANK_HPP_
