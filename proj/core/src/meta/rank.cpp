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

#include "npl/meta/rank.hpp"

#include <utility>

#include "npl/error.hpp"

namespace npl {

std::size_t RankModP(const PrimeField& field, std::size_t rows, std::size_t cols,
                     std::vector<std::uint64_t> a) {
  if (a.size() != rows * cols) throw Error(ErrorCode::kArityMismatch, "entry count does not match shape");
  for (auto& x : a) x %= field.modulus();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const std::uint64_t inv = field.Inv(a[rank * cols + c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t factor = field.Mul(a[r * cols + c], inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[r * cols + j] = field.Sub(a[r * cols + j], field.Mul(factor, a[rank * cols + j]));
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t RankModP(const CoeffMatrix& m) { return RankModP(m.field, m.rows(), m.cols(), m.entries); }

std::uint64_t DeterminantModP(const PrimeField& field, std::size_t n, std::vector<std::uint64_t> a) {
  if (a.size() != n * n) throw Error(ErrorCode::kArityMismatch, "determinant needs a square matrix");
  for (auto& x : a) x %= field.modulus();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a[pivot * n + j], a[c * n + j]);
      det = field.Neg(det);
    }
    det = field.Mul(det, a[c * n + c]);
    const std::uint64_t inv = field.Inv(a[c * n + c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t factor = field.Mul(a[r * n + c], inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        a[r * n + j] = field.Sub(a[r * n + j], field.Mul(factor, a[c * n + j]));
      }
    }
  }
  return det;
}

}  // namespace npl
