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

#ifndef NPL_CIRCUITS_BERKOWITZ_HPP_
#define NPL_CIRCUITS_BERKOWITZ_HPP_

#include <cstddef>
#include <vector>

namespace npl {

/// Ring operations used by the division-free determinant. Specialize or
/// pass a custom Ops type for rings whose multiplication needs context
/// (term caps, circuit builders).
template <typename T>
struct DefaultRingOps {
  T one;
  T Add(const T& a, const T& b) const { return a + b; }
  T Mul(const T& a, const T& b) const { return a * b; }
  T Neg(const T& a) const { return -a; }
  T One() const { return one; }
};

/// Characteristic polynomial coefficients of a square matrix over any
/// commutative ring, by Berkowitz's division-free method.
///
/// Returns c_0..c_n with det(lambda*I - A) = sum_i c_i lambda^(n-i), c_0 = 1.
/// The matrix is peeled from the bottom-right corner: for the trailing
/// block [[a, R], [C, M]] the new coefficients are the lower-triangular
/// Toeplitz product with first column (1, -a, -RC, -RMC, ..., -RM^(m-2)C).
template <typename T, typename Ops>
std::vector<T> CharPolyBerkowitz(const std::vector<std::vector<T>>& a, const Ops& ops) {
  const std::size_t n = a.size();
  std::vector<T> coeffs{ops.One()};
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t m = n - k;  // side of the current trailing block
    std::vector<T> col;
    col.reserve(m + 1);
    col.push_back(ops.One());
    col.push_back(ops.Neg(a[k][k]));
    // w = M^j C, starting at C.
    std::vector<T> w;
    w.reserve(m - 1);
    for (std::size_t i = k + 1; i < n; ++i) w.push_back(a[i][k]);
    for (std::size_t j = 0; j + 2 <= m; ++j) {
      T rw = ops.Mul(a[k][k + 1], w[0]);
      for (std::size_t t = 1; t < w.size(); ++t) rw = ops.Add(rw, ops.Mul(a[k][k + 1 + t], w[t]));
      col.push_back(ops.Neg(rw));
      if (j + 3 <= m) {
        std::vector<T> next;
        next.reserve(w.size());
        for (std::size_t r = 0; r < w.size(); ++r) {
          T acc = ops.Mul(a[k + 1 + r][k + 1], w[0]);
          for (std::size_t t = 1; t < w.size(); ++t) {
            acc = ops.Add(acc, ops.Mul(a[k + 1 + r][k + 1 + t], w[t]));
          }
          next.push_back(std::move(acc));
        }
        w = std::move(next);
      }
    }
    std::vector<T> next;
    next.reserve(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      const std::size_t hi = i < m - 1 ? i : m - 1;
      T acc = ops.Mul(col[i], coeffs[0]);
      for (std::size_t j = 1; j <= hi; ++j) acc = ops.Add(acc, ops.Mul(col[i - j], coeffs[j]));
      next.push_back(std::move(acc));
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

/// det(A) = (-1)^n c_n. The empty matrix has determinant one.
template <typename T, typename Ops>
T DeterminantBerkowitz(const std::vector<std::vector<T>>& a, const Ops& ops) {
  auto coeffs = CharPolyBerkowitz(a, ops);
  T det = coeffs.back();
  return a.size() % 2 == 0 ? det : ops.Neg(det);
}

}  // namespace npl

#endif  // NPL_CIRCUITS_BERKOWITZ_HPP_
