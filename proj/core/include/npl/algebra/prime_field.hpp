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

#ifndef NPL_ALGEBRA_PRIME_FIELD_HPP_
#define NPL_ALGEBRA_PRIME_FIELD_HPP_

#include <cstdint>
#include <iosfwd>

namespace npl {

class FieldElement;

/// Integers modulo a prime p. The modulus is checked for primality on
/// construction and must be below 2^62 so that sums of two canonical
/// residues never overflow.
class PrimeField {
 public:
  static constexpr std::uint64_t kMersenne31 = (std::uint64_t{1} << 31) - 1;
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  // Raw residue arithmetic. Arguments must already be canonical (< p).
  std::uint64_t Add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t Sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t Neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t Mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t Pow(std::uint64_t base, std::uint64_t exponent) const noexcept;
  /// Throws Error(kDivisionByZero) for a == 0.
  std::uint64_t Inv(std::uint64_t a) const;

  /// Reduces an arbitrary signed integer into [0, p).
  std::uint64_t Reduce(std::int64_t x) const noexcept;

  FieldElement Element(std::int64_t x) const;
  FieldElement Zero() const;
  FieldElement One() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool IsPrime(std::uint64_t n) noexcept;

/// A canonical residue tagged with its modulus. Mixing elements of
/// different fields throws Error(kFieldMismatch).
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::int64_t x)
      : value_(field.Reduce(x)), p_(field.modulus()) {}

  static FieldElement FromCanonical(const PrimeField& field, std::uint64_t v);

  std::uint64_t value() const noexcept { return value_; }
  PrimeField field() const { return PrimeField(p_); }
  std::uint64_t modulus() const noexcept { return p_; }
  bool IsZero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement Pow(std::uint64_t exponent) const;
  FieldElement Inverse() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldElement(std::uint64_t v, std::uint64_t p, int) : value_(v), p_(p) {}
  void CheckSameField(const FieldElement& o) const;

  std::uint64_t value_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

}  // namespace npl

#endif  // NPL_ALGEBRA_PRIME_FIELD_HPP_
