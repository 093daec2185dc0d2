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

#include "npl/algebra/affine.hpp"

#include <string>

#include "npl/error.hpp"

namespace npl {

AffineForm::AffineForm(PrimeField field, std::vector<std::uint64_t> coeffs, std::uint64_t constant)
    : field_(field), coeffs_(std::move(coeffs)), constant_(constant % field.modulus()) {
  for (auto& c : coeffs_) c %= field_.modulus();
}

AffineForm AffineForm::FromInts(PrimeField field, const std::vector<std::int64_t>& coeffs,
                                std::int64_t constant) {
  std::vector<std::uint64_t> reduced;
  reduced.reserve(coeffs.size());
  for (auto c : coeffs) reduced.push_back(field.Reduce(c));
  return AffineForm(field, std::move(reduced), field.Reduce(constant));
}

AffineForm AffineForm::Variable(PrimeField field, std::size_t num_vars, std::size_t i) {
  std::vector<std::uint64_t> c(num_vars, 0);
  c.at(i) = 1;
  return AffineForm(field, std::move(c), 0);
}

AffineForm AffineForm::ConstantForm(PrimeField field, std::size_t num_vars, std::int64_t c) {
  return AffineForm(field, std::vector<std::uint64_t>(num_vars, 0), field.Reduce(c));
}

FieldElement AffineForm::Evaluate(std::span<const FieldElement> point) const {
  if (point.size() != coeffs_.size()) {
    throw Error(ErrorCode::kArityMismatch, "point of length " + std::to_string(point.size()) +
                                               " for form in " + std::to_string(coeffs_.size()) +
                                               " variables");
  }
  std::uint64_t acc = constant_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (point[i].modulus() != field_.modulus()) {
      throw Error(ErrorCode::kFieldMismatch, "evaluation point outside the form's field");
    }
    acc = field_.Add(acc, field_.Mul(coeffs_[i], point[i].value()));
  }
  return FieldElement::FromCanonical(field_, acc);
}

SparsePoly AffineForm::ToPoly() const {
  SparsePoly p(field_, coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    p.AddTerm(Monomial::Variable(coeffs_.size(), i), coeffs_[i]);
  }
  p.AddTerm(Monomial(coeffs_.size()), constant_);
  return p;
}

SparsePoly SubstituteAffine(const SparsePoly& g, std::span<const AffineForm> forms,
                            std::size_t term_cap) {
  if (forms.size() != g.num_vars()) {
    throw Error(ErrorCode::kArityMismatch, std::to_string(forms.size()) + " forms for " +
                                               std::to_string(g.num_vars()) + " variables");
  }
  if (forms.empty()) {
    throw Error(ErrorCode::kArityMismatch, "substitution needs at least one form");
  }
  const std::size_t v = forms.front().num_vars();
  for (const auto& f : forms) {
    if (f.num_vars() != v) throw Error(ErrorCode::kArityMismatch, "forms disagree on variable count");
    if (!(f.field() == g.field())) throw Error(ErrorCode::kFieldMismatch, "form over another field");
  }

  // powers[i][e] = l_i^e, grown on demand.
  std::vector<std::vector<SparsePoly>> powers(forms.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const SparsePoly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(SparsePoly::Constant(g.field(), v, 1));
      cache.push_back(forms[i].ToPoly());
    }
    while (cache.size() <= e) cache.push_back(cache.back().Multiply(cache[1], term_cap));
    return cache[e];
  };

  SparsePoly result(g.field(), v);
  for (const auto& [m, c] : g.terms()) {
    SparsePoly term = SparsePoly::Constant(g.field(), v, 1);
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
      if (m[i] != 0) term = term.Multiply(power(i, m[i]), term_cap);
    }
    result += term.Scale(FieldElement::FromCanonical(g.field(), c));
    if (result.num_terms() > term_cap) {
      throw Error(ErrorCode::kTermCapExceeded,
                  "substitution exceeds " + std::to_string(term_cap) + " terms");
    }
  }
  return result;
}

}  // namespace npl
