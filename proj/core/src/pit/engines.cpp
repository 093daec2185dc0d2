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

#include "npl/pit/engines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "npl/algebra/random.hpp"
#include "npl/error.hpp"
#include "npl/pit/parallel.hpp"

namespace npl {
namespace {

// p^v, or nullopt past the budget.
std::optional<std::uint64_t> PointCount(std::uint64_t p, std::size_t v, std::uint64_t budget) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < v; ++i) {
    if (n > budget / p) return std::nullopt;
    n *= p;
  }
  return n <= budget ? std::optional<std::uint64_t>(n) : std::nullopt;
}

}  // namespace

BlackBox BlackBox::FromCircuit(const Circuit& c) {
  return BlackBox{c.field(), c.num_inputs(), c.FormalDegree(),
                  [c](std::span<const std::uint64_t> x) { return c.EvaluateRaw(x); }};
}

std::string ToString(PitOutcome o) {
  switch (o) {
    case PitOutcome::kProvenZero: return "ProvenZero";
    case PitOutcome::kProvenNonzero: return "ProvenNonzero";
    case PitOutcome::kProbablyZero: return "ProbablyZero";
  }
  return "Unknown";
}

PitVerdict PitVerdict::ProvenZero(const BlackBox& box, std::uint64_t points_examined) {
  PitVerdict v;
  v.outcome_ = PitOutcome::kProvenZero;
  v.engine_ = "exhaustive";
  v.trials_ = points_examined;
  v.degree_bound_ = box.degree_bound;
  v.modulus_ = box.field.modulus();
  return v;
}

PitVerdict PitVerdict::Nonzero(const BlackBox& box, std::vector<std::uint64_t> point, std::string engine,
                               std::uint64_t trials_used) {
  const std::uint64_t value = box.eval(point);
  if (value == 0) throw std::logic_error("nonzero verdict with a vanishing witness");
  PitVerdict v;
  v.outcome_ = PitOutcome::kProvenNonzero;
  v.engine_ = std::move(engine);
  v.witness_ = std::move(point);
  v.witness_value_ = value;
  v.trials_ = trials_used;
  v.degree_bound_ = box.degree_bound;
  v.modulus_ = box.field.modulus();
  return v;
}

PitVerdict PitVerdict::ProbablyZero(const BlackBox& box, std::uint64_t trials) {
  PitVerdict v;
  v.outcome_ = PitOutcome::kProbablyZero;
  v.engine_ = "schwartz-zippel";
  v.trials_ = trials;
  v.degree_bound_ = box.degree_bound;
  v.modulus_ = box.field.modulus();
  return v;
}

double PitVerdict::PerTrialErrorBound() const noexcept {
  if (modulus_ == 0) return 1.0;
  return std::min(1.0, static_cast<double>(degree_bound_) / static_cast<double>(modulus_));
}

double PitVerdict::ErrorBound() const noexcept {
  if (outcome_ != PitOutcome::kProbablyZero) return 0.0;
  return std::pow(PerTrialErrorBound(), static_cast<double>(trials_));
}

PitVerdict PitExhaustive(const BlackBox& box, std::uint64_t budget) {
  const std::uint64_t p = box.field.modulus();
  if (p <= box.degree_bound) {
    throw Error(ErrorCode::kCharacteristicTooSmall,
                "exhaustive PIT needs p > degree bound " + std::to_string(box.degree_bound) +
                    ", got p = " + std::to_string(p));
  }
  const auto points = PointCount(p, box.arity, budget);
  if (!points) {
    throw Error(ErrorCode::kEnumerationBudgetExceeded,
                std::to_string(p) + "^" + std::to_string(box.arity) + " points exceed budget " +
                    std::to_string(budget));
  }
  std::vector<std::uint64_t> x(box.arity, 0);
  for (std::uint64_t n = 0; n < *points; ++n) {
    if (box.eval(x) != 0) return PitVerdict::Nonzero(box, x, "exhaustive", n + 1);
    // Odometer, last coordinate fastest.
    for (std::size_t i = box.arity; i-- > 0;) {
      if (++x[i] < p) break;
      x[i] = 0;
    }
  }
  return PitVerdict::ProvenZero(box, *points);
}

PitVerdict PitExhaustive(const Circuit& c, std::uint64_t budget) {
  return PitExhaustive(BlackBox::FromCircuit(c), budget);
}

PitVerdict PitSchwartzZippel(const BlackBox& box, std::uint64_t trials, std::uint64_t seed, unsigned jobs) {
  auto point_for = [&](std::uint64_t t) {
    Rng rng(DeriveSeed(seed, t));
    std::vector<std::uint64_t> x(box.arity);
    for (auto& xi : x) xi = rng.Residue(box.field);
    return x;
  };
  const auto hit = FirstHit(trials, jobs, [&](std::uint64_t t) { return box.eval(point_for(t)) != 0; });
  if (hit) return PitVerdict::Nonzero(box, point_for(*hit), "schwartz-zippel", *hit + 1);
  return PitVerdict::ProbablyZero(box, trials);
}

PitVerdict PitSchwartzZippel(const Circuit& c, std::uint64_t trials, std::uint64_t seed, unsigned jobs) {
  return PitSchwartzZippel(BlackBox::FromCircuit(c), trials, seed, jobs);
}

PitVerdict PitAuto(const BlackBox& box, std::uint64_t trials, std::uint64_t seed, std::uint64_t budget,
                   unsigned jobs) {
  if (box.field.modulus() > box.degree_bound && PointCount(box.field.modulus(), box.arity, budget)) {
    return PitExhaustive(box, budget);
  }
  return PitSchwartzZippel(box, trials, seed, jobs);
}

}  // namespace npl
