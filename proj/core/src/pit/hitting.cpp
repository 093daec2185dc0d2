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

#include "npl/pit/hitting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "npl/algebra/random.hpp"
#include "npl/error.hpp"
#include "npl/pit/parallel.hpp"

namespace npl {
namespace {

// Degeneracy checks enumerate F_p^N only when it is this small.
constexpr std::uint64_t kAssessBudget = std::uint64_t{1} << 16;
constexpr std::uint64_t kAssessTrials = 25;

BlackBox MetaBox(const MetaPolynomial& t) {
  return BlackBox{t.field(), t.arity(), t.DegreeBound(),
                  [&t](std::span<const std::uint64_t> cv) { return t.EvaluateRaw(cv); }};
}

std::vector<std::uint64_t> RawCoeffs(const SparsePoly& f, const MonomialIndex& index) {
  std::vector<std::uint64_t> out(index.Dimension(), 0);
  for (const auto& [m, c] : f.terms()) out[index.Rank(m)] = c;
  return out;
}

void CheckSpaces(const FamilyDescriptor& desc, const MetaPolynomial& t) {
  desc.Validate();
  if (!(desc.space == t.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "family lives in " + desc.space.ToString() + ", " + t.id() +
                                               " in " + t.space().ToString());
  }
}

}  // namespace

PitVerdict AssessMeta(const MetaPolynomial& t, std::uint64_t trials, std::uint64_t seed, std::uint64_t budget) {
  return PitAuto(MetaBox(t), trials, seed, budget);
}

HitReport SuccinctHittingCheck(const FamilyDescriptor& desc, const MetaPolynomial& t, const HitBudget& budget,
                               std::uint64_t seed, unsigned jobs) {
  CheckSpaces(desc, t);
  const PrimeField& field = t.field();
  const MonomialIndex index(desc.space);

  HitReport report;
  report.meta_id = t.id();
  report.family = desc;
  report.modulus = field.modulus();
  report.budget = budget;
  report.seed = seed;
  report.t_degenerate = AssessMeta(t, kAssessTrials, seed, std::min(budget.enumeration_budget, kAssessBudget))
                            .outcome() != PitOutcome::kProvenNonzero;

  if (budget.exhaustive) {
    std::optional<SparsePoly> found;
    report.members_examined = ForEachMember(desc, field, budget.enumeration_budget, [&](const FamilyMember& m) {
      if (t.EvaluateRaw(RawCoeffs(m.poly, index)) == 0) return true;
      found = m.poly;
      return false;
    });
    if (found) report.witness = std::move(found);
  } else {
    const auto hit = FirstHit(budget.trials, jobs, [&](std::uint64_t i) {
      const FamilyMember m = SampleFamily(desc, field, DeriveSeed(seed, i));
      return t.EvaluateRaw(RawCoeffs(m.poly, index)) != 0;
    });
    if (hit) {
      report.witness = SampleFamily(desc, field, DeriveSeed(seed, *hit)).poly;
      report.witness_trial = *hit;
      report.members_examined = *hit + 1;
    } else {
      report.members_examined = budget.trials;
    }
  }

  if (report.witness) {
    report.witness_value = t.Evaluate(CoeffVector(*report.witness, index)).value();
    if (report.witness_value == 0) throw std::logic_error("hitting witness re-evaluated to zero");
    report.outcome = HitReport::Outcome::kWitness;
  }
  return report;
}

std::string ToString(AuditClass c) {
  switch (c) {
    case AuditClass::kValidSeparation: return "valid-separation-instance";
    case AuditClass::kRefuted: return "refuted";
    case AuditClass::kNonSeparating: return "non-separating";
  }
  return "unknown";
}

AuditReport NaturalProofAudit(const MetaPolynomial& t, const FamilyDescriptor& easy, const SparsePoly& hard,
                              const HitBudget& budget, std::uint64_t seed) {
  CheckSpaces(easy, t);
  if (!FitsSpace(hard, t.space())) {
    throw Error(ErrorCode::kSpaceMismatch, "hard polynomial does not lie in " + t.space().ToString());
  }
  if (!(hard.field() == t.field())) throw Error(ErrorCode::kFieldMismatch, "hard polynomial over another field");
  const PrimeField& field = t.field();
  const MonomialIndex index(easy.space);

  AuditReport report{t.id(), easy, field.modulus(), budget, seed, 0, 0, std::nullopt, 0, hard, 0, false,
                     AuditClass::kNonSeparating};
  report.t_degenerate = AssessMeta(t, kAssessTrials, seed, std::min(budget.enumeration_budget, kAssessBudget))
                            .outcome() != PitOutcome::kProvenNonzero;

  auto record = [&](const SparsePoly& f) {
    ++report.members_examined;
    const std::uint64_t value = t.EvaluateRaw(RawCoeffs(f, index));
    if (value == 0) {
      ++report.members_vanishing;
    } else if (!report.easy_witness) {
      report.easy_witness = f;
      report.easy_witness_value = value;
    }
  };
  if (budget.exhaustive) {
    ForEachMember(easy, field, budget.enumeration_budget, [&](const FamilyMember& m) {
      record(m.poly);
      return true;
    });
  } else {
    for (std::uint64_t i = 0; i < budget.trials; ++i) record(SampleFamily(easy, field, DeriveSeed(seed, i)).poly);
  }
  if (report.easy_witness && t.Evaluate(CoeffVector(*report.easy_witness, index)).IsZero()) {
    throw std::logic_error("audit witness re-evaluated to zero");
  }

  report.hard_value = t.Evaluate(CoeffVector(hard, index)).value();
  if (report.easy_witness) {
    report.classification = AuditClass::kRefuted;
  } else if (report.hard_value == 0) {
    report.classification = AuditClass::kNonSeparating;
  } else {
    report.classification = AuditClass::kValidSeparation;
  }
  return report;
}

EquivalenceReport EquivalenceCheck(const std::vector<MetaPolynomial>& meta_class, const FamilyDescriptor& family,
                                   std::uint64_t budget) {
  EquivalenceReport report;
  for (const auto& t : meta_class) {
    CheckSpaces(family, t);
    const PrimeField& field = t.field();
    const MonomialIndex index(family.space);

    // Hitting side: T is a nonzero polynomial and no member hits it.
    const bool nonzero = PitExhaustive(MetaBox(t), budget).outcome() == PitOutcome::kProvenNonzero;
    if (nonzero) {
      const HitReport hit = SuccinctHittingCheck(family, t, HitBudget{true, 0, budget}, 0);
      if (hit.outcome == HitReport::Outcome::kNoneFound) report.unhit_nonzero.push_back(t.id());
    }

    // Property side: T vanishes on the whole family and is nonzero at some
    // point of the ambient space.
    bool vanishes = true;
    ForEachMember(family, field, budget, [&](const FamilyMember& m) {
      vanishes = t.EvaluateRaw(RawCoeffs(m.poly, index)) == 0;
      return vanishes;
    });
    if (!vanishes) continue;
    const std::uint64_t p = field.modulus();
    std::vector<std::uint64_t> x(t.arity(), 0);
    std::uint64_t visited = 0;
    bool somewhere = false;
    while (!somewhere) {
      if (++visited > budget) {
        throw Error(ErrorCode::kEnumerationBudgetExceeded, "ambient space of " + t.id() + " exceeds budget");
      }
      somewhere = t.EvaluateRaw(x) != 0;
      std::size_t i = 0;
      while (i < x.size() && ++x[i] == p) x[i++] = 0;
      if (i == x.size()) break;
    }
    if (somewhere) report.vanishing_useful.push_back(t.id());
  }
  report.family_is_hitting_set = report.unhit_nonzero.empty();
  report.natural_property_exists = !report.vanishing_useful.empty();
  return report;
}

}  // namespace npl
