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

#include "npl/circuits/determinant.hpp"

#include <string>

#include "npl/circuits/berkowitz.hpp"
#include "npl/error.hpp"

namespace npl {

AffineMatrixMap::AffineMatrixMap(std::size_t n, std::vector<AffineForm> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw Error(ErrorCode::kDescriptorInvalid, "matrix side must be positive");
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::kArityMismatch, std::to_string(entries_.size()) + " entries for a " +
                                               std::to_string(n_) + "x" + std::to_string(n_) +
                                               " matrix");
  }
  for (const auto& e : entries_) {
    if (e.num_vars() != entries_.front().num_vars()) {
      throw Error(ErrorCode::kArityMismatch, "matrix entries disagree on variable count");
    }
    if (!(e.field() == entries_.front().field())) {
      throw Error(ErrorCode::kFieldMismatch, "matrix entries over different fields");
    }
  }
}

AffineMatrixMap AffineMatrixMap::Generic(PrimeField field, std::size_t n) {
  std::vector<AffineForm> entries;
  for (std::size_t i = 0; i < n * n; ++i) entries.push_back(AffineForm::Variable(field, n * n, i));
  return AffineMatrixMap(n, std::move(entries));
}

bool AffineMatrixMap::IsHomogeneous() const noexcept {
  for (const auto& e : entries_) {
    if (!e.IsHomogeneous()) return false;
  }
  return true;
}

SparsePoly DetProjection(const AffineMatrixMap& l, std::size_t term_cap) {
  if (l.side() > kMaxDetSide) {
    throw Error(ErrorCode::kTermCapExceeded,
                "matrix side " + std::to_string(l.side()) + " above " + std::to_string(kMaxDetSide));
  }
  const std::size_t n = l.side();
  std::vector<std::vector<SparsePoly>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(l.at(i, j).ToPoly());
  }
  return DeterminantBerkowitz(m, PolyRingOps{l.field(), l.num_vars(), term_cap});
}

Circuit DetProjectionCircuit(const AffineMatrixMap& l) {
  const std::size_t n = l.side();
  CircuitBuilder b(l.field(), l.num_vars());
  std::vector<std::vector<Wire>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& form = l.at(i, j);
      Wire w = b.ConstantRaw(form.constant());
      for (std::size_t t = 0; t < form.num_vars(); ++t) {
        if (form.coeffs()[t] != 0) w = w + b.ConstantRaw(form.coeffs()[t]) * b.Input(t);
      }
      m[i].push_back(w);
    }
  }
  return b.Build(DeterminantBerkowitz(m, WireRingOps{&b}));
}

}  // namespace npl
