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

#ifndef NPL_META_META_POLYNOMIAL_HPP_
#define NPL_META_META_POLYNOMIAL_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "npl/algebra/poly_space.hpp"
#include "npl/algebra/prime_field.hpp"
#include "npl/circuits/circuit.hpp"
#include "npl/meta/coeff_matrix.hpp"

namespace npl {

enum class RankMethod { kPartials, kShifted };
enum class MinorSelection { kLeading, kExplicit, kRandom };

/// Which matrix to build and which (r+1) x (r+1) minor to take.
struct RankMethodSpec {
  RankMethod method = RankMethod::kPartials;
  std::uint32_t k = 1;
  std::uint32_t shift = 0;  // always 0 for plain partials
  MinorSelection selection = MinorSelection::kLeading;
  std::uint32_t size = 1;  // r + 1
  std::vector<std::uint32_t> rows;  // explicit selection only
  std::vector<std::uint32_t> cols;
  std::uint64_t seed = 0;  // random selection only

  /// Leading (top-left) minor of the given size.
  static RankMethodSpec Leading(RankMethod method, std::uint32_t k, std::uint32_t shift, std::uint32_t size) {
    RankMethodSpec s;
    s.method = method;
    s.k = k;
    s.shift = shift;
    s.size = size;
    return s;
  }

  friend bool operator==(const RankMethodSpec&, const RankMethodSpec&) = default;
};

// { "method": "partials"|"shifted", "k", "shift",
//   "minor": { "kind": "leading"|"explicit"|"random", "size", "rows"?, "cols"?, "seed"? } }
nlohmann::json RankSpecToJson(const RankMethodSpec& spec);
RankMethodSpec RankSpecFromJson(const nlohmann::json& j);

/// A polynomial T in the N coefficients of a PolySpace.
///
/// Three representations: an explicit circuit with N inputs, the built-in
/// discriminant b^2 - 4ac on Poly^2(2), and a rank minor (determinant of a
/// fixed submatrix of a partials matrix built from the coefficients).
class MetaPolynomial {
 public:
  struct CircuitRep {
    Circuit circuit;
  };
  struct DiscriminantRep {};
  struct MinorRep {
    RankMethodSpec spec;
    std::vector<std::uint32_t> rows;  // resolved selection
    std::vector<std::uint32_t> cols;
    std::shared_ptr<const CoeffMatrix> symbolic;  // null for large spaces
    std::size_t dimension_cap;
  };
  using Rep = std::variant<CircuitRep, DiscriminantRep, MinorRep>;

  static MetaPolynomial FromCircuit(Circuit c, PolySpace space, std::string id = "circuit");
  static MetaPolynomial Discriminant(const PrimeField& field);
  /// sum_i weights[i] * t_i.
  static MetaPolynomial Linear(const PrimeField& field, PolySpace space,
                               std::span<const FieldElement> weights, std::string id = "linear");
  /// t_index: reads one coefficient.
  static MetaPolynomial Coordinate(const PrimeField& field, PolySpace space, std::uint64_t index);
  static MetaPolynomial Zero(const PrimeField& field, PolySpace space);

  const PrimeField& field() const noexcept { return field_; }
  const PolySpace& space() const noexcept { return space_; }
  std::uint64_t arity() const noexcept { return arity_; }
  const std::string& id() const noexcept { return id_; }
  const Rep& rep() const noexcept { return rep_; }

  /// T(cv). Throws Error(kArityMismatch) unless cv has length N.
  FieldElement Evaluate(std::span<const FieldElement> cv) const;
  /// Residue-level evaluation; cv entries must be canonical.
  std::uint64_t EvaluateRaw(std::span<const std::uint64_t> cv) const;

  /// Upper bound on the total degree of T in the meta-variables.
  std::uint64_t DegreeBound() const;

  /// Circuit form when one can be built (always for circuits and the
  /// discriminant; for minors when symbolic forms exist).
  std::optional<Circuit> ToCircuit() const;

 private:
  friend MetaPolynomial MinorMeta(const RankMethodSpec&, const PolySpace&, const PrimeField&,
                                  std::size_t);
  MetaPolynomial(PrimeField field, PolySpace space, std::string id, Rep rep);

  PrimeField field_;
  PolySpace space_;
  std::uint64_t arity_;
  std::string id_;
  Rep rep_;
};

/// Minor meta-polynomial for spec over Poly^d(v). Selection is resolved
/// here (random selection draws from spec.seed).
/// Throws Error(kMinorOutOfRange) if the selection does not fit.
MetaPolynomial MinorMeta(const RankMethodSpec& spec, const PolySpace& space, const PrimeField& field,
                         std::size_t dimension_cap = kDefaultDimensionCap);

/// Every minor of every size of the matrix for (method, k, shift) over
/// space, as explicit selections ordered by size, then rows, then columns.
std::vector<MetaPolynomial> AllMinors(RankMethod method, std::uint32_t k, std::uint32_t shift,
                                      const PolySpace& space, const PrimeField& field,
                                      std::size_t dimension_cap = kDefaultDimensionCap);

/// Numeric matrix for spec built from a coefficient vector in space.
CoeffMatrix RankMatrixFor(const RankMethodSpec& spec, const PolySpace& space,
                          std::span<const FieldElement> cv,
                          std::size_t dimension_cap = kDefaultDimensionCap);

/// Evaluates T at every vector; results are ordered by input index
/// regardless of the worker count.
std::vector<FieldElement> EvaluateBatch(const MetaPolynomial& t,
                                        const std::vector<std::vector<FieldElement>>& cvs,
                                        unsigned jobs = 1);

}  // namespace npl

#endif  // NPL_META_META_POLYNOMIAL_HPP_
