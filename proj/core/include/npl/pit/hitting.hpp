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

#ifndef NPL_PIT_HITTING_HPP_
#define NPL_PIT_HITTING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "npl/algebra/sparse_poly.hpp"
#include "npl/circuits/families.hpp"
#include "npl/meta/meta_polynomial.hpp"
#include "npl/pit/engines.hpp"

namespace npl {

/// Either a number of random family samples or a full walk of the
/// family's parameter grid (capped by enumeration_budget).
struct HitBudget {
  bool exhaustive = false;
  std::uint64_t trials = 25;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

/// Whether T is the zero polynomial, decided on F_p^N (exhaustively when
/// the budget and p > deg T allow, otherwise by SZ).
PitVerdict AssessMeta(const MetaPolynomial& t, std::uint64_t trials, std::uint64_t seed,
                      std::uint64_t budget = kDefaultEnumerationBudget);

struct HitReport {
  enum class Outcome { kWitness, kNoneFound };

  std::string meta_id;
  FamilyDescriptor family;
  std::uint64_t modulus = 0;
  HitBudget budget;
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::kNoneFound;
  std::uint64_t members_examined = 0;
  /// Witness only: the member and T(coeff(member)) != 0.
  std::optional<SparsePoly> witness;
  std::uint64_t witness_value = 0;
  /// Randomized mode: the trial index that produced the witness.
  std::optional<std::uint64_t> witness_trial;
  /// T itself tested as zero; the hitting definition only covers nonzero T.
  bool t_degenerate = false;

  /// NoneFound from a complete grid walk: a proof (over this F_p) that the
  /// family does not hit T.
  bool IsProof() const noexcept { return outcome == Outcome::kNoneFound && budget.exhaustive; }
};

/// Looks for f in the family with T(coeff(f)) != 0.
/// Throws Error(kSpaceMismatch) when the spaces differ and
/// Error(kEnumerationBudgetExceeded) when an exhaustive grid is too large.
HitReport SuccinctHittingCheck(const FamilyDescriptor& desc, const MetaPolynomial& t,
                               const HitBudget& budget, std::uint64_t seed, unsigned jobs = 1);

enum class AuditClass { kValidSeparation, kRefuted, kNonSeparating };
std::string ToString(AuditClass c);

struct AuditReport {
  std::string meta_id;
  FamilyDescriptor easy;
  std::uint64_t modulus = 0;
  HitBudget budget;
  std::uint64_t seed = 0;
  std::uint64_t members_examined = 0;
  std::uint64_t members_vanishing = 0;
  std::optional<SparsePoly> easy_witness;  // first easy member with T != 0
  std::uint64_t easy_witness_value = 0;
  SparsePoly hard;
  std::uint64_t hard_value = 0;
  bool t_degenerate = false;
  AuditClass classification = AuditClass::kNonSeparating;

  double VanishingFraction() const noexcept {
    return members_examined == 0 ? 0.0
                                 : static_cast<double>(members_vanishing) / static_cast<double>(members_examined);
  }
};

/// Tests the pattern "T vanishes on the easy family but not at hard".
/// A nonzero value on any examined easy member classifies as refuted
/// (regardless of the hard value); otherwise a zero hard value is
/// non-separating; otherwise a valid separation instance.
AuditReport NaturalProofAudit(const MetaPolynomial& t, const FamilyDescriptor& easy, const SparsePoly& hard,
                              const HitBudget& budget, std::uint64_t seed);

/// Extensional check of "a nonzero T in the class is missed by the
/// family" versus "some T in the class vanishes on the family and is
/// nonzero somewhere", over F_p with full enumeration on both sides.
struct EquivalenceReport {
  std::vector<std::string> unhit_nonzero;     // nonzero by PIT, family never hits
  std::vector<std::string> vanishing_useful;  // zero on every member, nonzero at some point of F_p^N
  bool family_is_hitting_set = false;         // every nonzero T hit
  bool natural_property_exists = false;       // vanishing_useful nonempty
  bool Coincide() const {
    return family_is_hitting_set != natural_property_exists && unhit_nonzero == vanishing_useful;
  }
};

EquivalenceReport EquivalenceCheck(const std::vector<MetaPolynomial>& meta_class,
                                   const FamilyDescriptor& family,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace npl

#endif  // NPL_PIT_HITTING_HPP_
