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

#ifndef NPL_PIT_ENGINES_HPP_
#define NPL_PIT_ENGINES_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "npl/algebra/prime_field.hpp"
#include "npl/circuits/circuit.hpp"

namespace npl {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// A polynomial known only through evaluation, with a degree bound.
struct BlackBox {
  PrimeField field;
  std::size_t arity;
  std::uint64_t degree_bound;
  std::function<std::uint64_t(std::span<const std::uint64_t>)> eval;

  static BlackBox FromCircuit(const Circuit& c);
};

enum class PitOutcome { kProvenZero, kProvenNonzero, kProbablyZero };

std::string ToString(PitOutcome o);

/// Result of an identity test. Nonzero verdicts are only produced through
/// Nonzero(), which re-evaluates the witness.
class PitVerdict {
 public:
  static PitVerdict ProvenZero(const BlackBox& box, std::uint64_t points_examined);
  /// Throws std::logic_error if box vanishes at point.
  static PitVerdict Nonzero(const BlackBox& box, std::vector<std::uint64_t> point, std::string engine,
                            std::uint64_t trials_used);
  static PitVerdict ProbablyZero(const BlackBox& box, std::uint64_t trials);

  PitOutcome outcome() const noexcept { return outcome_; }
  const std::string& engine() const noexcept { return engine_; }
  /// ProvenNonzero only.
  std::span<const std::uint64_t> witness() const noexcept { return witness_; }
  std::uint64_t witness_value() const noexcept { return witness_value_; }
  /// Trials run (SZ) or points examined (exhaustive).
  std::uint64_t trials() const noexcept { return trials_; }
  std::uint64_t degree_bound() const noexcept { return degree_bound_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// p <= 2 * degree: the per-trial bound is above 1/2.
  bool bound_degraded() const noexcept { return 2 * degree_bound_ >= modulus_; }
  /// min(1, d/p): chance a single random point misses a nonzero polynomial.
  double PerTrialErrorBound() const noexcept;
  /// (d/p)^trials for ProbablyZero; 0 for proven verdicts.
  double ErrorBound() const noexcept;

 private:
  PitVerdict() = default;

  PitOutcome outcome_ = PitOutcome::kProbablyZero;
  std::string engine_;
  std::vector<std::uint64_t> witness_;
  std::uint64_t witness_value_ = 0;
  std::uint64_t trials_ = 0;
  std::uint64_t degree_bound_ = 0;
  std::uint64_t modulus_ = 0;
};

/// Decides identity by evaluating on all of F_p^v (lexicographic order).
/// Sound because a nonzero polynomial of degree < p has a nonzero point.
/// Throws Error(kCharacteristicTooSmall) when p <= degree bound and
/// Error(kEnumerationBudgetExceeded) when p^v > budget.
PitVerdict PitExhaustive(const BlackBox& box, std::uint64_t budget = kDefaultEnumerationBudget);
PitVerdict PitExhaustive(const Circuit& c, std::uint64_t budget = kDefaultEnumerationBudget);

/// Random points; trial t draws from DeriveSeed(seed, t). Stops at the
/// first nonzero value. Deterministic in seed for any jobs value.
PitVerdict PitSchwartzZippel(const BlackBox& box, std::uint64_t trials, std::uint64_t seed,
                             unsigned jobs = 1);
PitVerdict PitSchwartzZippel(const Circuit& c, std::uint64_t trials, std::uint64_t seed,
                             unsigned jobs = 1);

/// Exhaustive when p > degree and p^v fits the budget, otherwise SZ.
PitVerdict PitAuto(const BlackBox& box, std::uint64_t trials, std::uint64_t seed,
                   std::uint64_t budget = kDefaultEnumerationBudget, unsigned jobs = 1);

}  // namespace npl

#endif  // NPL_PIT_ENGINES_HPP_
