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

#include "npl/meta/coeff_matrix.hpp"

#include <string>

#include "npl/error.hpp"

namespace npl {
namespace {

// prod_i m_i! / (m_i - alpha_i)!  (mod p); requires alpha | m.
std::uint64_t FallingFactorial(const PrimeField& field, const Monomial& m, const Monomial& alpha) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    for (std::uint32_t t = 0; t < alpha[i]; ++t) r = field.Mul(r, (m[i] - t) % field.modulus());
  }
  return r;
}

Monomial Quotient(const Monomial& m, const Monomial& by) {
  Monomial q = m;
  for (std::size_t i = 0; i < m.num_vars(); ++i) q[i] -= by[i];
  return q;
}

void CheckPreconditions(const PrimeField& field, std::uint32_t degree, std::uint32_t k) {
  if (field.modulus() <= degree) {
    throw Error(ErrorCode::kCharacteristicTooSmall,
                "partial derivatives of degree-" + std::to_string(degree) + " polynomials need p > " +
                    std::to_string(degree) + ", got p = " + std::to_string(field.modulus()));
  }
  if (k > degree) {
    throw Error(ErrorCode::kOrderOutOfRange,
                "order " + std::to_string(k) + " exceeds degree " + std::to_string(degree));
  }
}

// Row labels and column basis shared by the numeric and symbolic builders.
CoeffMatrix Layout(const PrimeField& field, std::size_t v, std::uint32_t degree, std::uint32_t k,
                   std::uint32_t shift, std::size_t dimension_cap) {
  const std::uint64_t shifts = Binomial(v + shift - 1, shift);
  const std::uint64_t derivs = Binomial(v + k - 1, k);
  const std::uint64_t rows = shifts > dimension_cap ? dimension_cap + 1 : shifts * derivs;
  const std::uint64_t cols = Binomial(v + degree - k + shift - 1, degree - k + shift);
  if (rows > dimension_cap || cols > dimension_cap) {
    throw Error(ErrorCode::kDimensionCapExceeded,
                "matrix would be " + std::to_string(shifts * derivs) + "x" + std::to_string(cols) +
                    ", cap " + std::to_string(dimension_cap));
  }
  CoeffMatrix m{field, {}, {}, {}, std::nullopt};
  for (const auto& beta : MonomialsOfDegree(v, shift)) {
    for (const auto& alpha : MonomialsOfDegree(v, k)) m.row_ops.emplace_back(beta, alpha);
  }
  m.col_monomials = MonomialsOfDegree(v, degree - k + shift);
  m.entries.assign(m.rows() * m.cols(), 0);
  return m;
}

}  // namespace

SparsePoly PartialDerivative(const SparsePoly& f, const Monomial& alpha) {
  if (alpha.num_vars() != f.num_vars()) {
    throw Error(ErrorCode::kArityMismatch, "derivative operator arity differs from polynomial");
  }
  SparsePoly out(f.field(), f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    if (!m.DivisibleBy(alpha)) continue;
    out.AddTerm(Quotient(m, alpha), f.field().Mul(c, FallingFactorial(f.field(), m, alpha)));
  }
  return out;
}

CoeffMatrix PartialsMatrix(const SparsePoly& f, std::uint32_t k) {
  if (f.IsZero() || !f.IsHomogeneous()) {
    throw Error(ErrorCode::kSpaceMismatch,
                "degree inference needs a nonzero homogeneous polynomial; pass the degree explicitly");
  }
  return PartialsMatrix(f, static_cast<std::uint32_t>(f.degree()), k);
}

CoeffMatrix PartialsMatrix(const SparsePoly& f, std::uint32_t degree, std::uint32_t k) {
  return ShiftedPartialsMatrix(f, degree, k, 0);
}

CoeffMatrix ShiftedPartialsMatrix(const SparsePoly& f, std::uint32_t degree, std::uint32_t k,
                                  std::uint32_t shift, std::size_t dimension_cap) {
  CheckPreconditions(f.field(), degree, k);
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != degree) {
      throw Error(ErrorCode::kSpaceMismatch,
                  "term " + m.ToString() + " is not of degree " + std::to_string(degree));
    }
  }
  const std::size_t v = f.num_vars();
  CoeffMatrix out = Layout(f.field(), v, degree, k, shift, dimension_cap);
  const MonomialIndex cols(PolySpace::Homogeneous(static_cast<std::uint32_t>(v), degree - k + shift));

  // Derivatives are shared across shifts.
  std::vector<SparsePoly> derivatives;
  const std::size_t derivs = Binomial(v + k - 1, k);
  for (std::size_t a = 0; a < derivs; ++a) {
    derivatives.push_back(PartialDerivative(f, out.row_ops[a].second));
  }
  for (std::size_t r = 0; r < out.rows(); ++r) {
    const Monomial& beta = out.row_ops[r].first;
    for (const auto& [m, c] : derivatives[r % derivs].terms()) {
      out.entries[r * out.cols() + cols.Rank(m * beta)] = c;
    }
  }
  return out;
}

CoeffMatrix SymbolicShiftedPartials(const PrimeField& field, const PolySpace& space, std::uint32_t k,
                                    std::uint32_t shift, std::size_t dimension_cap) {
  if (space.mode != SpaceMode::kHomogeneous) {
    throw Error(ErrorCode::kSpaceMismatch, "partials matrices need a homogeneous space, got " +
                                               space.ToString());
  }
  const MonomialIndex index(space);
  if (index.Dimension() > kSymbolicSpaceLimit) {
    throw Error(ErrorCode::kDimensionCapExceeded,
                "symbolic forms limited to spaces of dimension " + std::to_string(kSymbolicSpaceLimit));
  }
  CheckPreconditions(field, space.degree, k);
  CoeffMatrix out = Layout(field, space.num_vars, space.degree, k, shift, dimension_cap);
  std::vector<MetaLinearForm> forms(out.rows() * out.cols());
  for (std::size_t r = 0; r < out.rows(); ++r) {
    const auto& [beta, alpha] = out.row_ops[r];
    for (std::size_t c = 0; c < out.cols(); ++c) {
      const Monomial& gamma = out.col_monomials[c];
      if (!gamma.DivisibleBy(beta)) continue;
      // Coefficient of gamma in x^beta d^alpha f comes from the term m = gamma/beta * alpha.
      const Monomial m = Quotient(gamma, beta) * alpha;
      const std::uint64_t scale = FallingFactorial(field, m, alpha);
      if (scale != 0) forms[r * out.cols() + c].emplace_back(index.Rank(m), scale);
    }
  }
  out.symbolic = std::move(forms);
  return out;
}

CoeffMatrix Instantiate(const CoeffMatrix& symbolic, std::span<const FieldElement> cv) {
  if (!symbolic.symbolic) throw Error(ErrorCode::kSpaceMismatch, "matrix has no symbolic form");
  CoeffMatrix out = symbolic;
  const auto& field = symbolic.field;
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    std::uint64_t acc = 0;
    for (const auto& [var, coeff] : (*symbolic.symbolic)[i]) {
      if (var >= cv.size()) {
        throw Error(ErrorCode::kArityMismatch, "coefficient vector shorter than the space");
      }
      acc = field.Add(acc, field.Mul(coeff, cv[var].value()));
    }
    out.entries[i] = acc;
  }
  return out;
}

}  // namespace npl
