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

#include "npl/algebra/poly_space.hpp"

#include <string>

#include "npl/error.hpp"

namespace npl {

std::string Monomial::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> MonomialsOfDegree(std::size_t num_vars, std::uint32_t degree) {
  MonomialIndex index(PolySpace::Homogeneous(static_cast<std::uint32_t>(num_vars), degree));
  return index.Basis();
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > ~std::uint64_t{0}) {
      throw Error(ErrorCode::kDimensionCapExceeded,
                  "C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

// Number of degree-d monomials in v variables.
std::uint64_t HomogeneousCount(std::uint64_t v, std::uint64_t d) {
  if (v == 0) return d == 0 ? 1 : 0;
  return Binomial(v + d - 1, d);
}

}  // namespace

std::uint64_t PolySpace::Dimension() const {
  if (num_vars == 0) {
    throw Error(ErrorCode::kSpaceMismatch, "polynomial space needs at least one variable");
  }
  return mode == SpaceMode::kHomogeneous ? Binomial(num_vars + degree - 1, degree)
                                         : Binomial(num_vars + degree, degree);
}

bool PolySpace::Contains(const Monomial& m) const noexcept {
  if (m.num_vars() != num_vars) return false;
  const auto d = m.degree();
  return mode == SpaceMode::kHomogeneous ? d == degree : d <= degree;
}

std::string PolySpace::ToString() const {
  return std::to_string(num_vars) + (mode == SpaceMode::kHomogeneous ? ":" : ":<=") +
         std::to_string(degree);
}

MonomialIndex::MonomialIndex(PolySpace space) : space_(space), dimension_(space.Dimension()) {}

std::uint64_t MonomialIndex::BlockOffset(std::uint32_t degree) const {
  if (space_.mode == SpaceMode::kHomogeneous) return 0;
  std::uint64_t offset = 0;
  for (std::uint32_t j = space_.degree; j > degree; --j) {
    offset += HomogeneousCount(space_.num_vars, j);
  }
  return offset;
}

// Counts monomials of the same degree that are lexicographically larger.
// For position i with remaining degree rem and r = v-i-1 trailing variables,
// exponents t in (e_i, rem] contribute sum_t C(rem-t+r-1, r-1), which
// telescopes to C(rem-e_i-1+r, r).
std::uint64_t MonomialIndex::RankWithinDegree(const Monomial& m) const {
  const std::size_t v = m.num_vars();
  std::uint64_t rem = m.degree();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i + 1 < v; ++i) {
    const std::uint64_t r = v - i - 1;
    if (rem > m[i]) rank += Binomial(rem - m[i] - 1 + r, r);
    rem -= m[i];
  }
  return rank;
}

Monomial MonomialIndex::UnrankWithinDegree(std::uint64_t index, std::uint32_t degree) const {
  const std::size_t v = space_.num_vars;
  Monomial m(v);
  std::uint64_t rem = degree;
  for (std::size_t i = 0; i + 1 < v; ++i) {
    const std::uint64_t r = v - i - 1;
    for (std::uint64_t t = rem + 1; t-- > 0;) {
      const std::uint64_t count = HomogeneousCount(r, rem - t);
      if (index < count) {
        m[i] = static_cast<std::uint32_t>(t);
        rem -= t;
        break;
      }
      index -= count;
    }
  }
  m[v - 1] = static_cast<std::uint32_t>(rem);
  return m;
}

std::uint64_t MonomialIndex::Rank(const Monomial& m) const {
  if (!space_.Contains(m)) {
    throw Error(ErrorCode::kSpaceMismatch,
                "monomial " + m.ToString() + " not in space " + space_.ToString());
  }
  return BlockOffset(static_cast<std::uint32_t>(m.degree())) + RankWithinDegree(m);
}

Monomial MonomialIndex::Unrank(std::uint64_t index) const {
  if (index >= dimension_) {
    throw Error(ErrorCode::kSpaceMismatch, "index " + std::to_string(index) +
                                               " out of range for space " + space_.ToString());
  }
  if (space_.mode == SpaceMode::kHomogeneous) return UnrankWithinDegree(index, space_.degree);
  for (std::uint32_t d = space_.degree + 1; d-- > 0;) {
    const std::uint64_t block = HomogeneousCount(space_.num_vars, d);
    if (index < block) return UnrankWithinDegree(index, d);
    index -= block;
  }
  throw Error(ErrorCode::kSpaceMismatch, "unreachable unrank state");
}

std::vector<Monomial> MonomialIndex::Basis() const {
  std::vector<Monomial> out;
  out.reserve(dimension_);
  for (std::uint64_t i = 0; i < dimension_; ++i) out.push_back(Unrank(i));
  return out;
}

}  // namespace npl
