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

#include "npl/algebra/prime_field.hpp"

#include <ostream>
#include <string>

#include "npl/error.hpp"

namespace npl {
namespace {

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = MulMod(r, b, m);
    b = MulMod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool IsPrime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= kMaxModulus) {
    throw Error(ErrorCode::kNotPrime, "modulus " + std::to_string(p) + " exceeds 2^62");
  }
  if (!IsPrime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
}

std::uint64_t PrimeField::Pow(std::uint64_t base, std::uint64_t exponent) const noexcept {
  return PowMod(base, exponent, p_);
}

std::uint64_t PrimeField::Inv(std::uint64_t a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return PowMod(a, p_ - 2, p_);
}

std::uint64_t PrimeField::Reduce(std::int64_t x) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = x % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

FieldElement PrimeField::Element(std::int64_t x) const { return FieldElement(*this, x); }
FieldElement PrimeField::Zero() const { return FieldElement(*this, 0); }
FieldElement PrimeField::One() const { return FieldElement(*this, 1); }

FieldElement FieldElement::FromCanonical(const PrimeField& field, std::uint64_t v) {
  return FieldElement(v % field.modulus(), field.modulus(), 0);
}

void FieldElement::CheckSameField(const FieldElement& o) const {
  if (p_ != o.p_) {
    throw Error(ErrorCode::kFieldMismatch,
                "F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  CheckSameField(o);
  std::uint64_t s = value_ + o.value_;
  return FieldElement(s >= p_ ? s - p_ : s, p_, 0);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  CheckSameField(o);
  return FieldElement(value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_, p_, 0);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  CheckSameField(o);
  return FieldElement(MulMod(value_, o.value_, p_), p_, 0);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  CheckSameField(o);
  return *this * o.Inverse();
}

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? 0 : p_ - value_, p_, 0);
}

FieldElement FieldElement::Pow(std::uint64_t exponent) const {
  return FieldElement(PowMod(value_, exponent, p_), p_, 0);
}

FieldElement FieldElement::Inverse() const {
  if (value_ == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return FieldElement(PowMod(value_, p_ - 2, p_), p_, 0);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.value() << " (mod " << a.modulus() << ")";
}

}  // namespace npl
