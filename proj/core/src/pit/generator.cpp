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

#include "npl/pit/generator.hpp"

#include <string>

#include "npl/error.hpp"

namespace npl {

Generator::Generator(PrimeField field, std::size_t seed_length, PolySpace target,
                     std::uint64_t coordinate_degree, Map map)
    : field_(field),
      seed_length_(seed_length),
      target_(target),
      dimension_(target.Dimension()),
      coordinate_degree_(coordinate_degree),
      map_(std::move(map)) {}

std::vector<std::uint64_t> Generator::EvaluateRaw(std::span<const std::uint64_t> seed) const {
  if (seed.size() != seed_length_) {
    throw Error(ErrorCode::kArityMismatch, "seed of length " + std::to_string(seed.size()) +
                                               ", generator seed length " + std::to_string(seed_length_));
  }
  auto out = map_(seed);
  if (out.size() != dimension_) {
    throw std::logic_error("generator produced a vector of the wrong length");
  }
  return out;
}

std::vector<FieldElement> Generator::Evaluate(std::span<const FieldElement> seed) const {
  std::vector<std::uint64_t> raw;
  raw.reserve(seed.size());
  for (const auto& s : seed) {
    if (s.modulus() != field_.modulus()) throw Error(ErrorCode::kFieldMismatch, "seed outside generator field");
    raw.push_back(s.value());
  }
  std::vector<FieldElement> out;
  for (auto x : EvaluateRaw(raw)) out.push_back(FieldElement::FromCanonical(field_, x));
  return out;
}

AffineMatrixMap SeedToMatrix(std::size_t n, const PrimeField& field, std::span<const std::uint64_t> seed) {
  const std::size_t vars = n * n;
  if (seed.size() != vars * vars) {
    throw Error(ErrorCode::kArityMismatch, "det generator seed needs " + std::to_string(vars * vars) +
                                               " entries, got " + std::to_string(seed.size()));
  }
  std::vector<AffineForm> entries;
  entries.reserve(vars);
  for (std::size_t r = 0; r < vars; ++r) {
    entries.emplace_back(field, std::vector<std::uint64_t>(seed.begin() + r * vars, seed.begin() + (r + 1) * vars), 0);
  }
  return AffineMatrixMap(n, std::move(entries));
}

Generator DetCoeffGenerator(std::size_t n, const PrimeField& field, std::size_t term_cap) {
  if (n == 0 || n > kMaxDetSide) {
    throw Error(ErrorCode::kTermCapExceeded,
                "det generator side " + std::to_string(n) + " outside [1, " + std::to_string(kMaxDetSide) + "]");
  }
  const auto vars = static_cast<std::uint32_t>(n * n);
  const PolySpace target = PolySpace::Homogeneous(vars, static_cast<std::uint32_t>(n));
  const auto index = std::make_shared<const MonomialIndex>(target);
  auto map = [n, field, term_cap, index](std::span<const std::uint64_t> seed) {
    const SparsePoly det = DetProjection(SeedToMatrix(n, field, seed), term_cap);
    std::vector<std::uint64_t> out(index->Dimension(), 0);
    for (const auto& [m, c] : det.terms()) out[index->Rank(m)] = c;
    return out;
  };
  return Generator(field, std::size_t{vars} * vars, target, n, std::move(map));
}

PitVerdict GeneratorPit(const MetaPolynomial& t, const Generator& g, std::uint64_t trials, std::uint64_t seed,
                        unsigned jobs) {
  if (!(t.space() == g.target())) {
    throw Error(ErrorCode::kSpaceMismatch, "meta-polynomial on " + t.space().ToString() +
                                               ", generator into " + g.target().ToString());
  }
  if (!(t.field() == g.field())) throw Error(ErrorCode::kFieldMismatch, "meta-polynomial and generator fields differ");
  BlackBox composed{g.field(), g.seed_length(), t.DegreeBound() * g.coordinate_degree(),
                    [&t, &g](std::span<const std::uint64_t> s) { return t.EvaluateRaw(g.EvaluateRaw(s)); }};
  return PitSchwartzZippel(composed, trials, seed, jobs);
}

}  // namespace npl
