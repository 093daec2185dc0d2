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

#include <vector>

#include "npl/algebra/random.hpp"
#include "npl/error.hpp"
#include "npl/ips/certificate.hpp"
#include "npl/ips/cnf.hpp"
#include "random_circuits.hpp"

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

Cnf RandomCnf(std::size_t n, std::size_t m, Rng& rng) {
  Cnf cnf{n, {}};
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<int> clause;
    const std::size_t width = rng.Below(4);  // 0..3 literals
    for (std::size_t i = 0; i < width; ++i) {
      const int var = static_cast<int>(1 + rng.Below(n));
      clause.push_back(rng.Below(2) ? var : -var);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

std::vector<bool> Bits(std::uint64_t mask, std::size_t n) {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (mask >> i) & 1;
  return out;
}

std::optional<std::vector<bool>> SatisfyingAssignment(const Cnf& cnf) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cnf.num_vars); ++mask) {
    auto bits = Bits(mask, cnf.num_vars);
    if (cnf.Satisfies(bits)) return bits;
  }
  return std::nullopt;
}

// {x, x - 1} over one variable, refuted by C = 1 + y2 - y1.
PolynomialSystem XAndXMinusOne(const PrimeField& f) {
  CircuitBuilder a(f, 1), b(f, 1);
  std::vector<Circuit> members = {a.Build(a.Input(0)), b.Build(b.Input(0) - b.Constant(1))};
  return PolynomialSystem::Raw(f, 1, std::move(members));
}

Circuit OnePlusY2MinusY1(const PrimeField& f) {
  CircuitBuilder b(f, 2);
  return b.Build(b.Constant(1) + b.Input(1) - b.Input(0));
}

Circuit OneMinusY1MinusY2(const PrimeField& f, std::size_t arity) {
  CircuitBuilder b(f, arity);
  return b.Build(b.Constant(1) - b.Input(0) - b.Input(1));
}

TEST(Dimacs, ParsesCommentsAndMultilineClauses) {
  const Cnf cnf = ParseDimacsString("c a comment\np cnf 3 2\n1 -2\n 3 0 -1\n0\n");
  EXPECT_EQ(cnf.num_vars, 3u);
  ASSERT_EQ(cnf.clauses.size(), 2u);
  EXPECT_EQ(cnf.clauses[0], (std::vector<int>{1, -2, 3}));
  EXPECT_EQ(cnf.clauses[1], (std::vector<int>{-1}));
  EXPECT_EQ(ParseDimacsString(ToDimacs(cnf)), cnf);
  EXPECT_EQ(ParseDimacsString("p cnf 1 1\n1 0\n%\n0\n").clauses.size(), 1u);
}

TEST(Dimacs, MalformedInputsAreParseErrors) {
  for (const char* text : {"1 0\n", "p cnf 2 1\n3 0\n", "p cnf 2 1\n1 x 0\n", "p cnf 2 2\n1 0\n",
                           "p cnf 2 1\n1 2\n", "p dnf 2 1\n1 0\n", "p cnf 2 1\np cnf 2 1\n1 0\n"}) {
    ExpectErrorCode(ErrorCode::kParseError, [&] { (void)ParseDimacsString(text); });
  }
  try {
    (void)ParseDimacsString("p cnf 2 1\n\n1 x 0\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(CnfToSystem, ToySystemMatchesTheRule) {
  const PrimeField f(101);
  const PolynomialSystem sys = CnfToSystem(ParseDimacsString("p cnf 1 2\n1 0\n-1 0\n"), f);
  ASSERT_EQ(sys.members.size(), 3u);
  const SparsePoly x = SparsePoly::Variable(f, 1, 0), one = SparsePoly::Constant(f, 1, 1);
  EXPECT_EQ(sys.members[0].Expand(), one - x);
  EXPECT_EQ(sys.members[1].Expand(), x);
  EXPECT_EQ(sys.members[2].Expand(), x * x - x);
  EXPECT_EQ(sys.clause_map, (std::vector<std::int64_t>{0, 1, -1}));
  EXPECT_EQ(sys.provenance, SystemProvenance::kCnf);
}

TEST(CnfToSystem, TruthTableOnRandomCorpus) {
  const PrimeField f(101);
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.Below(4);
    const Cnf cnf = RandomCnf(n, 1 + rng.Below(6), rng);
    const PolynomialSystem sys = CnfToSystem(cnf, f);
    ASSERT_EQ(sys.members.size(), cnf.clauses.size() + n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto bits = Bits(mask, n);
      std::vector<std::uint64_t> pt;
      for (bool b : bits) pt.push_back(b ? 1 : 0);
      bool common_zero = true;
      for (const auto& m : sys.members) common_zero = common_zero && m.EvaluateRaw(pt) == 0;
      ASSERT_EQ(common_zero, cnf.Satisfies(bits)) << ToDimacs(cnf);
    }
  }
}

TEST(CnfToSystem, EmptyClauseAndWidthLimit) {
  const PrimeField f(7);
  const PolynomialSystem sys = CnfToSystem(Cnf{2, {{}}}, f);
  EXPECT_EQ(sys.members[0].Expand(), SparsePoly::Constant(f, 2, 1));
  ExpectErrorCode(ErrorCode::kClauseTooWide, [&] { (void)CnfToSystem(Cnf{4, {{1, 2, 3, 4}}}, f); });
}

TEST(Certificate, HandCertificatesAcceptExactly) {
  const PrimeField f(101);
  const VerificationReport a = VerifyCertificate(XAndXMinusOne(f), GeometricCertificate{OnePlusY2MinusY1(f)});
  EXPECT_TRUE(a.accepted) << a.reason;
  EXPECT_EQ(a.grade, "exact");
  EXPECT_EQ(a.error_bound, 0.0);

  const PolynomialSystem toy = CnfToSystem(ParseDimacsString("p cnf 1 2\n1 0\n-1 0\n"), f);
  const VerificationReport b = VerifyCertificate(toy, GeometricCertificate{OneMinusY1MinusY2(f, 3)});
  EXPECT_TRUE(b.accepted) << b.reason;
  EXPECT_TRUE(b.condition1);
  EXPECT_TRUE(b.condition2);
}

TEST(Certificate, RandomizedAcceptanceCarriesItsBound) {
  const PrimeField f(101);
  PitConfig sz;
  sz.engine = PitEngine::kSchwartzZippel;
  sz.trials = 10;
  sz.seed = 4;
  const VerificationReport r = VerifyCertificate(XAndXMinusOne(f), GeometricCertificate{OnePlusY2MinusY1(f)}, sz);
  EXPECT_TRUE(r.accepted);
  EXPECT_EQ(r.grade, "randomized");
  EXPECT_GT(r.error_bound, 0.0);
  EXPECT_LE(r.error_bound, 1.0 / 101.0);
  EXPECT_EQ(VerificationReportToJson(r)["grade"], "randomized");
}

TEST(Certificate, FailedConditionsAreNamed) {
  const PrimeField f(101);
  CircuitBuilder b(f, 2);
  const Circuit two = b.Build(b.Constant(2) + b.Input(1) - b.Input(0));
  const VerificationReport r1 = VerifyCertificate(XAndXMinusOne(f), GeometricCertificate{two});
  EXPECT_FALSE(r1.accepted);
  EXPECT_FALSE(r1.condition1);
  EXPECT_NE(r1.reason.find("condition 1"), std::string::npos);

  CircuitBuilder c(f, 2);
  const Circuit one_plus_y1 = c.Build(c.Constant(1) + c.Input(0));
  const VerificationReport r2 = VerifyCertificate(XAndXMinusOne(f), GeometricCertificate{one_plus_y1});
  EXPECT_FALSE(r2.accepted);
  EXPECT_TRUE(r2.condition1);
  EXPECT_FALSE(r2.condition2);
  EXPECT_NE(r2.reason.find("condition 2"), std::string::npos);
  EXPECT_EQ(r2.composed_verdict->outcome(), PitOutcome::kProvenNonzero);
}

TEST(Certificate, SatisfiableSystemsRejectEveryCandidate) {
  const PrimeField f(13);
  Rng rng(99);
  int systems = 0;
  while (systems < 10) {
    const std::size_t n = 1 + rng.Below(3);
    const Cnf cnf = RandomCnf(n, 1 + rng.Below(4), rng);
    const auto alpha = SatisfyingAssignment(cnf);
    if (!alpha) continue;
    ++systems;
    const PolynomialSystem sys = CnfToSystem(cnf, f);
    for (int k = 0; k < 20; ++k) {
      const Circuit c = testing_util::RandomCircuit(f, sys.members.size(), 3, 2 + rng.Below(6), rng);
      const VerificationReport r = VerifyCertificate(sys, GeometricCertificate{c});
      ASSERT_FALSE(r.accepted);
      ASSERT_FALSE(r.reason.empty());
      if (r.condition1) {
        // C(f(alpha)) = C(0) = 1 at the satisfying point.
        ASSERT_FALSE(r.condition2);
      }
    }
  }
}

TEST(Certificate, SoundnessWitnessAtSatisfyingPoint) {
  // Certificates with C(0) = 1 evaluate to 1 at a common zero.
  const PrimeField f(13);
  const PolynomialSystem sys = CnfToSystem(ParseDimacsString("p cnf 2 1\n1 2 0\n"), f);
  CircuitBuilder b(f, sys.members.size());
  Wire acc = b.Constant(1);
  for (std::size_t i = 0; i < sys.members.size(); ++i) acc = acc + b.Input(i) * b.Input(i);
  const VerificationReport r = VerifyCertificate(sys, GeometricCertificate{b.Build(acc)});
  EXPECT_TRUE(r.condition1);
  EXPECT_FALSE(r.condition2);
}

TEST(Certificate, PaddingWithDuplicatesPreservesAcceptance) {
  const PrimeField f(101);
  PolynomialSystem sys = XAndXMinusOne(f);
  sys.members.push_back(sys.members[0]);
  sys.members.push_back(sys.members[1]);
  CircuitBuilder b(f, 4);
  const Circuit padded = b.Build(b.Constant(1) + b.Input(1) - b.Input(0));
  const VerificationReport r = VerifyCertificate(sys, GeometricCertificate{padded});
  EXPECT_TRUE(r.accepted) << r.reason;
}

TEST(Certificate, RandomizedAcceptImpliesExhaustiveAccept) {
  const PrimeField f(13);
  Rng rng(55);
  const PolynomialSystem base = XAndXMinusOne(f);
  PitConfig sz;
  sz.engine = PitEngine::kSchwartzZippel;
  PitConfig ex;
  ex.engine = PitEngine::kExhaustive;
  int accepted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // Mix the known certificate with random multiples of the system.
    CircuitBuilder b(f, 2);
    const Circuit noise = testing_util::RandomCircuit(f, 2, 2, 4, rng);
    const std::vector<Wire> ys = {b.Input(0), b.Input(1)};
    Wire c = b.Constant(1) + b.Input(1) - b.Input(0);
    if (rng.Below(2)) c = c + b.Splice(noise, ys) * (b.Input(1) - b.Input(0) + b.Constant(1));
    else c = c + b.Splice(noise, ys) * b.Input(0);
    const GeometricCertificate cert{b.Build(c)};
    sz.seed = static_cast<std::uint64_t>(trial);
    const VerificationReport rs = VerifyCertificate(base, cert, sz);
    if (rs.accepted) {
      ++accepted;
      EXPECT_TRUE(VerifyCertificate(base, cert, ex).accepted);
    }
  }
  EXPECT_GT(accepted, 0);
}

TEST(Certificate, ArityAndFieldAreChecked) {
  const PrimeField f(101);
  ExpectErrorCode(ErrorCode::kArityMismatch,
                  [&] { (void)ComposeSystem(XAndXMinusOne(f), GeometricCertificate{OneMinusY1MinusY2(f, 3)}); });
  ExpectErrorCode(ErrorCode::kFieldMismatch,
                  [&] { (void)ComposeSystem(XAndXMinusOne(f), GeometricCertificate{OnePlusY2MinusY1(PrimeField(7))}); });
}

TEST(SystemJson, RoundTrip) {
  const PrimeField f(101);
  const PolynomialSystem sys = CnfToSystem(ParseDimacsString("p cnf 2 2\n1 -2 0\n2 0\n"), f);
  const PolynomialSystem back = SystemFromJson(SystemToJson(sys));
  EXPECT_EQ(back.num_vars, sys.num_vars);
  EXPECT_EQ(back.members, sys.members);
  EXPECT_EQ(back.provenance, sys.provenance);
  EXPECT_EQ(back.clause_map, sys.clause_map);
}

}  // namespace
}  // namespace npl
