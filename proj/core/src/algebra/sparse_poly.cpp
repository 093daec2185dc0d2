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

#include "npl/algebra/sparse_poly.hpp"

#include <string>

#include "npl/error.hpp"

namespace npl {

SparsePoly SparsePoly::Constant(PrimeField field, std::size_t num_vars, std::int64_t c) {
  SparsePoly p(field, num_vars);
  p.AddTerm(Monomial(num_vars), field.Reduce(c));
  return p;
}

SparsePoly SparsePoly::Variable(PrimeField field, std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) {
    throw Error(ErrorCode::kArityMismatch,
                "variable index " + std::to_string(i) + " with " + std::to_string(num_vars) +
                    " variables");
  }
  SparsePoly p(field, num_vars);
  p.AddTerm(Monomial::Variable(num_vars, i), 1);
  return p;
}

SparsePoly SparsePoly::FromTerms(PrimeField field, std::size_t num_vars,
                                 const std::vector<std::pair<Monomial, std::int64_t>>& terms) {
  SparsePoly p(field, num_vars);
  for (const auto& [m, c] : terms) {
    if (m.num_vars() != num_vars) {
      throw Error(ErrorCode::kArityMismatch, "monomial " + m.ToString() + " has " +
                                                 std::to_string(m.num_vars()) + " exponents, expected " +
                                                 std::to_string(num_vars));
    }
    p.AddTerm(m, field.Reduce(c));
  }
  return p;
}

std::int64_t SparsePoly::degree() const noexcept {
  std::int64_t d = -1;
  for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(m.degree()));
  return d;
}

bool SparsePoly::IsHomogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

FieldElement SparsePoly::Coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return FieldElement::FromCanonical(field_, it == terms_.end() ? 0 : it->second);
}

void SparsePoly::AddTerm(const Monomial& m, std::uint64_t c) {
  c %= field_.modulus();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.Add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

FieldElement SparsePoly::Evaluate(std::span<const FieldElement> point) const {
  if (point.size() != num_vars_) {
    throw Error(ErrorCode::kArityMismatch, "point of length " + std::to_string(point.size()) +
                                               " for polynomial in " + std::to_string(num_vars_) +
                                               " variables");
  }
  std::vector<std::uint64_t> x(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (point[i].modulus() != field_.modulus()) {
      throw Error(ErrorCode::kFieldMismatch, "evaluation point outside F_" +
                                                 std::to_string(field_.modulus()));
    }
    x[i] = point[i].value();
  }
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t t = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (m[i] != 0) t = field_.Mul(t, field_.Pow(x[i], m[i]));
    }
    acc = field_.Add(acc, t);
  }
  return FieldElement::FromCanonical(field_, acc);
}

void SparsePoly::CheckCompatible(const SparsePoly& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorCode::kFieldMismatch, "F_" + std::to_string(field_.modulus()) + " vs F_" +
                                               std::to_string(o.field_.modulus()));
  }
  if (num_vars_ != o.num_vars_) {
    throw Error(ErrorCode::kArityMismatch, std::to_string(num_vars_) + " vs " +
                                               std::to_string(o.num_vars_) + " variables");
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  CheckCompatible(o);
  for (const auto& [m, c] : o.terms_) AddTerm(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  CheckCompatible(o);
  for (const auto& [m, c] : o.terms_) AddTerm(m, field_.Neg(c));
  return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  r += o;
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  r -= o;
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, c] : r.terms_) c = field_.Neg(c);
  return r;
}

SparsePoly SparsePoly::Multiply(const SparsePoly& o, std::size_t term_cap) const {
  CheckCompatible(o);
  SparsePoly r(field_, num_vars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      r.AddTerm(m1 * m2, field_.Mul(c1, c2));
      if (r.terms_.size() > term_cap) {
        throw Error(ErrorCode::kTermCapExceeded,
                    "product exceeds " + std::to_string(term_cap) + " terms");
      }
    }
  }
  return r;
}

SparsePoly SparsePoly::Pow(std::uint64_t e, std::size_t term_cap) const {
  SparsePoly result = Constant(field_, num_vars_, 1);
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1) result = result.Multiply(base, term_cap);
    e >>= 1;
    if (e > 0) base = base.Multiply(base, term_cap);
  }
  return result;
}

SparsePoly SparsePoly::Scale(const FieldElement& c) const {
  if (c.modulus() != field_.modulus()) {
    throw Error(ErrorCode::kFieldMismatch, "scalar outside F_" + std::to_string(field_.modulus()));
  }
  SparsePoly r(field_, num_vars_);
  if (c.IsZero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, field_.Mul(v, c.value()));
  return r;
}

std::string SparsePoly::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    const bool unit = m.degree() == 0;
    if (c != 1 || unit) out += std::to_string(c);
    if (!unit) {
      if (c != 1) out += '*';
      out += m.ToString();
    }
  }
  return out;
}

bool FitsSpace(const SparsePoly& f, const PolySpace& space) noexcept {
  if (f.num_vars() != space.num_vars) return false;
  for (const auto& [m, c] : f.terms()) {
    if (!space.Contains(m)) return false;
  }
  return true;
}

std::vector<FieldElement> CoeffVector(const SparsePoly& f, const MonomialIndex& index) {
  const auto& space = index.space();
  if (f.num_vars() != space.num_vars) {
    throw Error(ErrorCode::kSpaceMismatch, "polynomial in " + std::to_string(f.num_vars()) +
                                               " variables, space " + space.ToString());
  }
  std::vector<FieldElement> out(index.Dimension(), f.field().Zero());
  for (const auto& [m, c] : f.terms()) {
    out[index.Rank(m)] = FieldElement::FromCanonical(f.field(), c);
  }
  return out;
}

SparsePoly FromCoeffVector(std::span<const FieldElement> coeffs, const MonomialIndex& index,
                           const PrimeField& field) {
  if (coeffs.size() != index.Dimension()) {
    throw Error(ErrorCode::kArityMismatch, "coefficient vector of length " +
                                               std::to_string(coeffs.size()) + ", space dimension " +
                                               std::to_string(index.Dimension()));
  }
  SparsePoly f(field, index.space().num_vars);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].modulus() != field.modulus()) {
      throw Error(ErrorCode::kFieldMismatch, "coefficient outside F_" + std::to_string(field.modulus()));
    }
    if (!coeffs[i].IsZero()) f.AddTerm(index.Unrank(i), coeffs[i].value());
  }
  return f;
}

}  // namespace npl
