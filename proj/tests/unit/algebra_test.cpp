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

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "npl/algebra/affine.hpp"
#include "npl/algebra/monomial.hpp"
#include "npl/algebra/poly_json.hpp"
#include "npl/algebra/poly_space.hpp"
#include "npl/algebra/prime_field.hpp"
#include "npl/algebra/random.hpp"
#include "npl/algebra/sparse_poly.hpp"
#include "npl/error.hpp"
#include "oracles.hpp"

namespace npl {
namespace {

template <typename F>
void ExpectErrorCode(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << ToString(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

SparsePoly RandomPoly(const PrimeField& field, std::size_t v, std::uint32_t max_deg, std::size_t terms, Rng& rng) {
  SparsePoly f(field, v);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(v, 0);
    std::uint32_t budget = static_cast<std::uint32_t>(rng.Below(max_deg + 1));
    for (std::size_t i = 0; i < v && budget > 0; ++i) {
      const auto x = static_cast<std::uint32_t>(rng.Below(budget + 1));
      e[i] = x;
      budget -= x;
    }
    f.AddTerm(Monomial(e), rng.Residue(field));
  }
  return f;
}

TEST(PrimeField, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(IsPrime(n), oracle::IsPrimeByTrialDivision(n)) << n;
  EXPECT_TRUE(IsPrime(PrimeField::kMersenne31));
  EXPECT_TRUE(IsPrime((std::uint64_t{1} << 61) - 1));
  EXPECT_FALSE(IsPrime(std::uint64_t{4294967297}));  // 641 * 6700417
}

TEST(PrimeField, RejectsCompositeModulus) {
  ExpectErrorCode(ErrorCode::kNotPrime, [] { PrimeField f(12); });
  ExpectErrorCode(ErrorCode::kNotPrime, [] { PrimeField f(1); });
}

TEST(PrimeField, InverseAndPowerAgainstOracle) {
  const PrimeField f(101);
  for (std::uint64_t a = 1; a < 101; ++a) {
    EXPECT_EQ(f.Mul(a, f.Inv(a)), 1u);
    EXPECT_EQ(f.Pow(a, 100), 1u);  // Fermat
    EXPECT_EQ(f.Pow(a, 37), oracle::PowMod(a, 37, 101));
  }
  ExpectErrorCode(ErrorCode::kDivisionByZero, [&] { f.Inv(0); });
}

TEST(PrimeField, LargeModulusProductsMatchWideMultiplication) {
  const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  const PrimeField f(p);
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t a = rng.Below(p), b = rng.Below(p);
    EXPECT_EQ(f.Mul(a, b), oracle::MulMod(a, b, p));
    EXPECT_EQ(f.Add(a, b), static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p));
  }
}

TEST(PrimeField, ReduceHandlesNegatives) {
  const PrimeField f(7);
  EXPECT_EQ(f.Reduce(-1), 6u);
  EXPECT_EQ(f.Reduce(-14), 0u);
  EXPECT_EQ(f.Reduce(15), 1u);
}

TEST(FieldElement, MixedFieldsAreRejected) {
  const FieldElement a(PrimeField(7), 3), b(PrimeField(11), 3);
  ExpectErrorCode(ErrorCode::kFieldMismatch, [&] { (void)(a + b); });
  ExpectErrorCode(ErrorCode::kDivisionByZero, [&] { (void)(a / FieldElement(PrimeField(7), 0)); });
  EXPECT_EQ((a / a).value(), 1u);
}

TEST(Random, DerivedSeedsAreDeterministicAndDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    EXPECT_EQ(DeriveSeed(42, i), DeriveSeed(42, i));
    seen.insert(DeriveSeed(42, i));
  }
  EXPECT_EQ(seen.size(), 1000u);
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Below(1000), b.Below(1000));
}

TEST(Random, BelowStaysInRangeAndCoversIt) {
  Rng rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = rng.Below(7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);  // expected 1000 each
  EXPECT_EQ(rng.Below(1), 0u);
}

TEST(Monomial, FormattingAndOrder) {
  EXPECT_EQ(Monomial({2, 0, 1}).ToString(), "x1^2*x3");
  EXPECT_EQ(Monomial({0, 0}).ToString(), "1");
  EXPECT_GT(Monomial({2, 0}), Monomial({1, 1}));
  EXPECT_TRUE(Monomial({2, 1}).DivisibleBy(Monomial({1, 1})));
  EXPECT_FALSE(Monomial({2, 0}).DivisibleBy(Monomial({0, 1})));
}

TEST(PolySpace, DimensionsMatchPascal) {
  for (std::uint32_t v = 1; v <= 6; ++v) {
    for (std::uint32_t d = 0; d <= 7; ++d) {
      EXPECT_EQ(PolySpace::Homogeneous(v, d).Dimension(), oracle::BinomialByPascal(v + d - 1, d));
      EXPECT_EQ(PolySpace::AtMost(v, d).Dimension(), oracle::BinomialByPascal(v + d, d));
    }
  }
  EXPECT_EQ(PolySpace::Homogeneous(2, 2).Dimension(), 3u);
  ExpectErrorCode(ErrorCode::kDimensionCapExceeded, [] { (void)Binomial(200, 100); });
}

TEST(MonomialIndex, HomogeneousBasisIsBruteForceDescendingLex) {
  for (std::uint32_t v = 1; v <= 4; ++v) {
    for (std::uint32_t d = 0; d <= 5; ++d) {
      const MonomialIndex index(PolySpace::Homogeneous(v, d));
      const auto expected = oracle::ExponentsOfDegree(v, d);
      const auto basis = index.Basis();
      ASSERT_EQ(basis.size(), expected.size());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        EXPECT_EQ(basis[i].exponents(), expected[i]);
        EXPECT_EQ(index.Rank(basis[i]), i);
      }
    }
  }
}

TEST(MonomialIndex, AtMostSpacesOrderDegreeBlocksDescending) {
  const MonomialIndex index(PolySpace::AtMost(2, 2));
  const std::vector<std::vector<std::uint32_t>> expected = {{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}};
  ASSERT_EQ(index.Dimension(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(index.Unrank(i).exponents(), expected[i]);
    EXPECT_EQ(index.Rank(Monomial(expected[i])), i);
  }
}

TEST(MonomialIndex, RoundTripAllSmallSpaces) {
  for (std::uint32_t v = 1; v <= 5; ++v) {
    for (std::uint32_t d = 0; d <= 6; ++d) {
      for (auto space : {PolySpace::Homogeneous(v, d), PolySpace::AtMost(v, d)}) {
        const MonomialIndex index(space);
        for (std::uint64_t i = 0; i < index.Dimension(); ++i) {
          const Monomial m = index.Unrank(i);
          ASSERT_TRUE(space.Contains(m));
          ASSERT_EQ(index.Rank(m), i) << space.ToString();
        }
      }
    }
  }
}

TEST(MonomialIndex, OutsideSpaceIsRejected) {
  const MonomialIndex index(PolySpace::Homogeneous(2, 2));
  ExpectErrorCode(ErrorCode::kSpaceMismatch, [&] { (void)index.Rank(Monomial({1, 0})); });
  ExpectErrorCode(ErrorCode::kSpaceMismatch, [&] { (void)index.Rank(Monomial({1, 1, 0})); });
}

TEST(SparsePoly, ProductEvaluatesToProductOfValues) {
  const PrimeField f(10007);
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const SparsePoly a = RandomPoly(f, 3, 4, 6, rng), b = RandomPoly(f, 3, 4, 6, rng);
    const auto pt = rng.Point(f, 3);
    EXPECT_EQ((a * b).Evaluate(pt), a.Evaluate(pt) * b.Evaluate(pt));
    EXPECT_EQ((a + b).Evaluate(pt), a.Evaluate(pt) + b.Evaluate(pt));
    EXPECT_EQ((a - b).Evaluate(pt), a.Evaluate(pt) - b.Evaluate(pt));
    EXPECT_EQ(a.Pow(3).Evaluate(pt), a.Evaluate(pt).Pow(3));
  }
}

TEST(SparsePoly, CoefficientsAreReducedAndCancel) {
  const PrimeField f(5);
  const auto x = SparsePoly::Variable(f, 2, 0), y = SparsePoly::Variable(f, 2, 1);
  const SparsePoly s = (x + y) * (x + y) - x * x - y * y;  // 2xy
  EXPECT_EQ(s.num_terms(), 1u);
  EXPECT_EQ(s.Coefficient(Monomial({1, 1})).value(), 2u);
  EXPECT_TRUE((x * y - y * x).IsZero());
  EXPECT_EQ((x * x).Pow(0), SparsePoly::Constant(f, 2, 1));
  // (x + y)^5 = x^5 + y^5 in characteristic 5.
  EXPECT_EQ((x + y).Pow(5), x.Pow(5) + y.Pow(5));
}

TEST(SparsePoly, TermCapIsEnforced) {
  const PrimeField f(101);
  SparsePoly s(f, 4);
  for (std::size_t i = 0; i < 4; ++i) s += SparsePoly::Variable(f, 4, i);
  s += SparsePoly::Constant(f, 4, 1);
  ExpectErrorCode(ErrorCode::kTermCapExceeded, [&] { (void)s.Pow(4, 50); });
  EXPECT_EQ(s.Pow(4).num_terms(), oracle::BinomialByPascal(8, 4));
}

TEST(SparsePoly, CoeffVectorRoundTrip) {
  const PrimeField f(13);
  Rng rng(2);
  const MonomialIndex index(PolySpace::AtMost(3, 3));
  for (int trial = 0; trial < 50; ++trial) {
    const SparsePoly a = RandomPoly(f, 3, 3, 8, rng);
    ASSERT_TRUE(FitsSpace(a, index.space()));
    EXPECT_EQ(FromCoeffVector(CoeffVector(a, index), index, f), a);
  }
  const auto x = SparsePoly::Variable(f, 3, 0);
  ExpectErrorCode(ErrorCode::kSpaceMismatch, [&] { (void)CoeffVector(x, MonomialIndex(PolySpace::Homogeneous(3, 2))); });
}

TEST(Affine, SubstitutionCommutesWithEvaluation) {
  const PrimeField f(97);
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const SparsePoly g = RandomPoly(f, 3, 3, 6, rng);
    std::vector<AffineForm> forms;
    for (int i = 0; i < 3; ++i) {
      std::vector<std::uint64_t> c = {rng.Residue(f), rng.Residue(f)};
      forms.emplace_back(f, c, rng.Residue(f));
    }
    const SparsePoly h = SubstituteAffine(g, forms);
    const auto pt = rng.Point(f, 2);
    std::vector<FieldElement> inner;
    for (const auto& l : forms) inner.push_back(l.Evaluate(pt));
    EXPECT_EQ(h.Evaluate(pt), g.Evaluate(inner));
  }
}

TEST(Affine, ArityMismatchIsRejected) {
  const PrimeField f(7);
  const SparsePoly g = SparsePoly::Variable(f, 2, 0);
  const std::vector<AffineForm> one = {AffineForm::Variable(f, 2, 0)};
  ExpectErrorCode(ErrorCode::kArityMismatch, [&] { (void)SubstituteAffine(g, one); });
}

TEST(PolyJson, RoundTripAndDiagnostics) {
  const PrimeField f(13);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const SparsePoly a = RandomPoly(f, 3, 4, 5, rng);
    EXPECT_EQ(PolyFromJson(PolyToJson(a)), a);
  }
  for (auto s : {PolySpace::Homogeneous(3, 2), PolySpace::AtMost(2, 4)}) EXPECT_EQ(SpaceFromJson(SpaceToJson(s)), s);
  try {
    (void)PolyFromJson(nlohmann::json{{"p", 13}, {"terms", nlohmann::json::array()}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("'v'"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace npl
