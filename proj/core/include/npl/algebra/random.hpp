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

#ifndef NPL_ALGEBRA_RANDOM_HPP_
#define NPL_ALGEBRA_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "npl/algebra/prime_field.hpp"

namespace npl {

/// SplitMix64 finalizer; used to derive independent stream seeds from
/// (base seed, index) pairs.
constexpr std::uint64_t Mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index) noexcept {
  return Mix64(base ^ Mix64(index));
}

/// Seeded generator with platform-independent bounded draws (the standard
/// distributions are implementation-defined, which would break report
/// reproducibility across toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  std::uint64_t Residue(const PrimeField& f) { return Below(f.modulus()); }
  FieldElement Element(const PrimeField& f) {
    return FieldElement::FromCanonical(f, Residue(f));
  }
  std::vector<FieldElement> Point(const PrimeField& f, std::size_t n) {
    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(Element(f));
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace npl

#endif  // NPL_ALGEBRA_RANDOM_HPP_
