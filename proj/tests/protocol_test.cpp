// Copyright 2026 The telematch Authors
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

#include "telematch/protocol.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "telematch/errors.hpp"
#include "test_support.hpp"

namespace telematch {
namespace {

using testing::C;
using testing::Gen;
using testing::kInvSqrt2;

// Matrices typed in from their published form.
const CMatrix kEq20(4, 4, {0.6, 0, 0.8, 0, 0, 0.8, 0, 0.6, 0.8, 0, -0.6, 0, 0, 0.6, 0, -0.8});

CMatrix eq19(double ratio) {
  const double s = std::sqrt(1 - ratio * ratio);
  return CMatrix(4, 4, {ratio, 0, s, 0, 0, 1, 0, 0, s, 0, -ratio, 0, 0, 0, 0, -1});
}

PureInputState random_input(Gen& g) {
  const auto q = g.qubit();
  return PureInputState(q[0], q[1]);
}

TEST(MatchedUnitaryTest, MaximalEntanglementIsDiagonal) {
  const Complex d[] = {1, 1, -1, -1};
  EXPECT_LE(max_abs_diff(matched_unitary(kInvSqrt2, kInvSqrt2, std::sqrt(2.0)), CMatrix::diag(d)),
            1e-15);
}

TEST(MatchedUnitaryTest, KEqualsOne) {
  EXPECT_LE(max_abs_diff(matched_unitary(0.8, 0.6, 1.0), kEq20), 1e-15);
}

TEST(MatchedUnitaryTest, KAtInverseA) {
  const CMatrix u = matched_unitary(0.8, 0.6, 1.25);
  EXPECT_LE(max_abs_diff(u, eq19(0.75)), 1e-12);
  EXPECT_NEAR(u(0, 2).real(), 0.6614378277661477, 1e-12);
  EXPECT_TRUE(is_unitary(u, 1e-9));
}

TEST(MatchedUnitaryTest, OutOfRangeThrows) {
  EXPECT_THROW(matched_unitary(0.8, 0.6, 1.3), KOutOfRange);
  EXPECT_THROW(matched_unitary(0.8, 0.6, 0.0), KOutOfRange);
  EXPECT_THROW(matched_unitary(0.8, 0.6, -1.0), KOutOfRange);
  EXPECT_THROW(matched_unitary(0.8, 0.6, std::nan("")), KOutOfRange);
}

TEST(MatchedUnitaryTest, ComplexCoefficientsStayUnitaryAndMatched) {
  const Complex c0 = std::polar(0.7, 0.4), c1 = std::polar(0.5, -1.1);
  const double k = 1.2;
  const CMatrix u = matched_unitary(c0, c1, k);
  EXPECT_TRUE(is_unitary(u, 1e-12));
  const C x(0.6, 0.0), y(0.0, 0.8);
  const CVector out = apply(u, attach_ancilla(CVector{c0 * x, c1 * y}));
  EXPECT_LE(std::abs(out[0] - k * c0 * c1 * x), 1e-15);
  EXPECT_LE(std::abs(out[1] - k * c0 * c1 * y), 1e-15);
}

TEST(AttachAncillaTest, AncillaIsMostSignificant) {
  EXPECT_EQ(max_abs_diff(attach_ancilla(CVector{1.0, 0.0}), CVector{1.0, 0.0, 0.0, 0.0}), 0.0);
  EXPECT_EQ(max_abs_diff(attach_ancilla(CVector{0.0, 1.0}), CVector{0.0, 1.0, 0.0, 0.0}), 0.0);
  const C x(0.48, 0.1), y(0.2, -0.3);
  EXPECT_EQ(max_abs_diff(attach_ancilla(CVector{x, y}), CVector{x, y, 0.0, 0.0}), 0.0);
  EXPECT_THROW(attach_ancilla(CVector::zeros(4)), DimensionMismatch);
}

TEST(EvolveAndMeasureTest, KOne) {
  const double a = 0.8, b = 0.6, h = kInvSqrt2;
  const auto r = evolve_and_measure(CVector{a * h, b * h, 0.0, 0.0}, matched_unitary(a, b, 1.0));
  EXPECT_NEAR(r.p_success, 0.4608, 1e-15);
  EXPECT_LE(max_abs_diff(r.success_state, CVector{h, h}), 1e-15);
  // A=1 residue: (a sqrt(1-b^2) alpha, b sqrt(1-a^2) beta), normalized.
  EXPECT_LE(max_abs_diff(r.fail_state, CVector{0.64, 0.36}.normalized()), 1e-15);
}

TEST(EvolveAndMeasureTest, PerfectChannelAlwaysSucceeds) {
  const C alpha(0.6, 0.0), beta(0.0, 0.8);
  const auto r = evolve_and_measure(attach_ancilla(CVector{alpha, beta}.scaled(kInvSqrt2)),
                                    matched_unitary(kInvSqrt2, kInvSqrt2, std::sqrt(2.0)));
  EXPECT_NEAR(r.p_success, 1.0, 1e-15);
  EXPECT_LE(max_abs_diff(r.success_state, CVector{alpha, beta}), 1e-15);
  EXPECT_EQ(r.fail_state.norm_sq(), 0.0);
}

TEST(EvolveAndMeasureTest, KAtInverseA) {
  const double a = 0.8, b = 0.6, h = kInvSqrt2;
  const auto r = evolve_and_measure(CVector{a * h, b * h, 0.0, 0.0}, matched_unitary(a, b, 1.25));
  EXPECT_NEAR(r.p_success, 0.72, 1e-15);
}

TEST(EvolveAndMeasureTest, ZeroNormRejected) {
  EXPECT_THROW(evolve_and_measure(CVector::zeros(4), kEq20), InvalidValue);
  EXPECT_THROW(evolve_and_measure(CVector::zeros(2), kEq20), DimensionMismatch);
}

TEST(PauliCorrectionTest, Table) {
  EXPECT_EQ(max_abs_diff(pauli_correction(1), CMatrix::identity(2)), 0.0);
  EXPECT_EQ(max_abs_diff(pauli_correction(2), pauli_z()), 0.0);
  const C alpha(0.6, 0.0), beta(0.0, 0.8);
  EXPECT_EQ(max_abs_diff(apply(pauli_correction(3), CVector{beta, alpha}), CVector{alpha, beta}),
            0.0);
  // Outcome-4 success state of the generalized protocol: (-beta, alpha).
  EXPECT_EQ(max_abs_diff(apply(pauli_correction(4), CVector{-beta, alpha}), CVector{alpha, beta}),
            0.0);
  EXPECT_THROW(pauli_correction(0), InvalidValue);
}

TEST(BranchCoefficientsTest, PairsFollowTheProjection) {
  const auto ch = TwoQubitChannel::diagonal(0.8, 0.6);
  const auto gbm = generalized_bell(0.9, std::sqrt(0.19));
  const double ap = 0.9, bp = std::sqrt(0.19);
  const std::array<std::pair<double, double>, 4> expected{
      {{0.8 * ap, 0.6 * bp}, {0.8 * bp, 0.6 * ap}, {0.8 * bp, 0.6 * ap}, {0.8 * ap, 0.6 * bp}}};
  for (int lam = 1; lam <= 4; ++lam) {
    const auto bc = branch_coefficients(ch, gbm, lam);
    EXPECT_NEAR(bc.c0.real(), expected[lam - 1].first, 1e-15);
    EXPECT_NEAR(bc.c1.real(), expected[lam - 1].second, 1e-15);
    EXPECT_EQ(bc.scale, 1.0);
    EXPECT_EQ(bc.swapped, lam >= 3);
  }
  const auto bell = branch_coefficients(ch, standard_bell(), 3);
  EXPECT_EQ(bell.c0, Complex(0.8));
  EXPECT_NEAR(bell.scale, kInvSqrt2, 1e-16);
}

TEST(AnalyticReportTest, PerfectTeleportation) {
  const auto r = analytic_report(PureInputState(0.6, 0.8), TwoQubitChannel::bell(),
                                 standard_bell(), FixedK{std::sqrt(2.0)});
  EXPECT_NEAR(r.total, 1.0, 1e-12);
  for (const auto& o : r.outcomes) EXPECT_NEAR(o.p_alice, 0.25, 1e-15);
}

TEST(AnalyticReportTest, BellKOne) {
  const auto r = analytic_report(PureInputState(0.6, 0.8), TwoQubitChannel::diagonal(0.8, 0.6),
                                 standard_bell(), FixedK{1.0});
  EXPECT_NEAR(r.total, 2 * 0.48 * 0.48, 1e-15);
  const double pa[] = {0.2304, 0.2304, 0.2696, 0.2696};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(r.outcomes[i].p_alice, pa[i], 1e-15);
    EXPECT_NEAR(r.outcomes[i].p_joint, 0.5 * 0.48 * 0.48, 1e-15);
  }
}

TEST(AnalyticReportTest, GeneralizedPerOutcomeOptimum) {
  const auto r = analytic_report(PureInputState(0.6, 0.8), TwoQubitChannel::diagonal(0.8, 0.6),
                                 generalized_bell(0.8, 0.6), MaxPerOutcome{});
  EXPECT_NEAR(r.total, 0.72, 1e-15);
  EXPECT_NEAR(r.outcomes[0].k_used, 1 / 0.64, 1e-12);
  EXPECT_NEAR(r.outcomes[1].k_used, 1 / 0.48, 1e-12);
  EXPECT_NEAR(r.outcomes[2].k_used, 1 / 0.48, 1e-12);
  EXPECT_NEAR(r.outcomes[3].k_used, 1 / 0.64, 1e-12);
}

TEST(AnalyticReportTest, MaxGlobalOnBellIsTwoBSquared) {
  const auto r = analytic_report(PureInputState(0.6, 0.8), TwoQubitChannel::diagonal(0.8, 0.6),
                                 standard_bell(), MaxGlobal{});
  EXPECT_NEAR(r.total, 0.72, 1e-15);
  for (const auto& o : r.outcomes) EXPECT_NEAR(o.k_used, 1.25, 1e-15);
}

TEST(AnalyticReportTest, RejectsBadInputs) {
  const PureInputState in(0.6, 0.8);
  EXPECT_THROW(analytic_report(in, TwoQubitChannel::diagonal(1.0, 0.0), standard_bell(),
                               MaxGlobal{}),
               UnteleportableChannel);
  EXPECT_THROW(analytic_report(in, TwoQubitChannel(0, kInvSqrt2, kInvSqrt2, 0), standard_bell(),
                               MaxGlobal{}),
               UnsupportedChannel);
  EXPECT_THROW(analytic_report(in, TwoQubitChannel::diagonal(0.8, 0.6), generalized_bell(1.0, 0.0),
                               MaxGlobal{}),
               InvalidBasis);
  EXPECT_THROW(analytic_report(in, TwoQubitChannel::diagonal(0.8, 0.6), standard_bell(),
                               FixedK{1.3}),
               KOutOfRange);
}

TEST(AnalyticReportTest, FixedKMustSuitEveryBranch) {
  // Branches 1/4 allow K <= 1/0.48, branches 2/3 only K <= 1/0.64.
  const auto ch = TwoQubitChannel::diagonal(0.8, 0.6);
  const auto basis = generalized_bell(0.6, 0.8);
  EXPECT_NEAR(optimal_k(ch, basis, 1), 1 / 0.48, 1e-12);
  EXPECT_NEAR(optimal_k(ch, basis, 2), 1 / 0.64, 1e-12);
  EXPECT_THROW(analytic_report(PureInputState(1.0, 0.0), ch, basis, FixedK{2.0}), KOutOfRange);
  EXPECT_NO_THROW(analytic_report(PureInputState(1.0, 0.0), ch, basis, FixedK{1.5625}));
}

TEST(OptimalKTest, Examples) {
  const auto ch = TwoQubitChannel::diagonal(0.8, 0.6);
  for (int lam = 1; lam <= 4; ++lam) EXPECT_NEAR(optimal_k(ch, standard_bell(), lam), 1.25, 1e-15);

  const auto ch1 = TwoQubitChannel::diagonal(0.9, std::sqrt(1 - 0.81));
  const auto gbm = generalized_bell(0.8, 0.6);
  EXPECT_NEAR(optimal_k(ch1, gbm, 1), 1.0 / 0.72, 1e-12);
  EXPECT_NEAR(optimal_k(ch1, gbm, 1), 1.3889, 1e-4);
  EXPECT_NEAR(optimal_k(ch1, gbm, 2), 1.85185, 1e-5);

  const auto sym = generalized_bell(kInvSqrt2, kInvSqrt2);
  EXPECT_NEAR(optimal_k(TwoQubitChannel::bell(), sym, 1), 2.0, 1e-12);
  EXPECT_NEAR(analytic_report(PureInputState(1.0, 0.0), TwoQubitChannel::bell(), sym,
                              MaxPerOutcome{})
                  .total,
              1.0, 1e-12);
  EXPECT_THROW(optimal_k(TwoQubitChannel::diagonal(1.0, 0.0), standard_bell(), 1),
               UnteleportableChannel);
}

TEST(SimulateReportTest, MatchesAnalyticForKOne) {
  Gen g(41);
  for (int n = 0; n < 20; ++n) {
    const auto in = random_input(g);
    const auto ch = TwoQubitChannel::diagonal(0.8, 0.6);
    const auto a = analytic_report(in, ch, standard_bell(), FixedK{1.0});
    const auto s = simulate_report(in, ch, standard_bell(), FixedK{1.0});
    EXPECT_LE(max_abs_diff(a, s), 1e-12);
  }
}

TEST(SimulateReportTest, PerfectChannel) {
  const auto s = simulate_report(PureInputState(C(0.6, 0), C(0, 0.8)), TwoQubitChannel::bell(),
                                 standard_bell(), FixedK{std::sqrt(2.0)});
  EXPECT_NEAR(s.total, 1.0, 1e-12);
  for (const auto& o : s.outcomes) EXPECT_NEAR(o.fidelity, 1.0, 1e-12);
}

TEST(SimulateReportTest, GeneralizedFixedK) {
  const auto ch = TwoQubitChannel::diagonal(0.8, 0.6);
  const auto basis = generalized_bell(0.6, 0.8);
  for (double k : {0.3, 1.0, 1.5}) {
    const auto s = simulate_report(PureInputState(0.6, 0.8), ch, basis, FixedK{k});
    EXPECT_NEAR(s.total, 4 * std::pow(k * 0.48 * 0.48, 2), 1e-12);
  }
}

TEST(SimulateReportTest, ComplexChannelKeepsFidelity) {
  const auto ch = TwoQubitChannel::diagonal(std::polar(0.8, 0.3), std::polar(0.6, -2.0));
  for (const auto& basis : {standard_bell(), generalized_bell(0.9, std::sqrt(0.19))}) {
    const PureInputState in(C(0.36, 0.48), C(0.0, 0.8));
    const auto a = analytic_report(in, ch, basis, MaxPerOutcome{});
    const auto s = simulate_report(in, ch, basis, MaxPerOutcome{});
    EXPECT_LE(max_abs_diff(a, s), 1e-12);
    for (const auto& o : s.outcomes) EXPECT_NEAR(o.fidelity, 1.0, 1e-9);
  }
}

// Random protocol configuration with a K valid for every branch.
struct Config {
  PureInputState input;
  TwoQubitChannel channel;
  TwoQubitBasis basis;
  double k;
  double a, b, ap, bp;
};

Config random_config(Gen& g, bool generalized) {
  const auto [a, b] = g.real_pair();
  const auto [ap, bp] = generalized ? g.real_pair() : std::array<double, 2>{kInvSqrt2, kInvSqrt2};
  const auto ch = TwoQubitChannel::diagonal(a, b);
  const auto basis = generalized ? generalized_bell(ap, bp) : standard_bell();
  double kmax = 1e300;
  for (int lam = 1; lam <= 4; ++lam) kmax = std::min(kmax, optimal_k(ch, basis, lam));
  return {random_input(g), ch, basis, g.uniform(0.01, 1.0) * kmax, a, b, ap, bp};
}

TEST(ProtocolProperty, OracleEquivalence) {
  Gen g(42);
  for (int n = 0; n < 100; ++n) {
    const Config c = random_config(g, n % 2 == 1);
    for (const KPolicy& p : {KPolicy{FixedK{c.k}}, KPolicy{MaxGlobal{}}, KPolicy{MaxPerOutcome{}}}) {
      const auto a = analytic_report(c.input, c.channel, c.basis, p);
      const auto s = simulate_report(c.input, c.channel, c.basis, p);
      EXPECT_LE(max_abs_diff(a, s), 1e-12);
    }
  }
}

TEST(ProtocolProperty, TotalIndependentOfInput) {
  Gen g(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Config c = random_config(g, trial % 2 == 0);
    double lo = 2.0, hi = -1.0;
    for (int n = 0; n < 50; ++n) {
      const double t = simulate_report(random_input(g), c.channel, c.basis, FixedK{c.k}).total;
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    EXPECT_LE(hi - lo, 1e-12);
  }
}

TEST(ProtocolProperty, NormalizationFactorizationFidelity) {
  Gen g(44);
  for (int n = 0; n < 100; ++n) {
    const Config c = random_config(g, n % 2 == 0);
    const auto s = simulate_report(c.input, c.channel, c.basis, FixedK{c.k});
    double sum = 0.0;
    double joint = 0.0;
    for (const auto& o : s.outcomes) {
      sum += o.p_alice;
      joint += o.p_joint;
      EXPECT_NEAR(o.p_joint, o.p_alice * o.p_bob, 1e-12);
      EXPECT_NEAR(o.fidelity, 1.0, 1e-9);
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_NEAR(s.total, joint, 1e-15);
    EXPECT_GE(s.total, 0.0);
    EXPECT_LE(s.total, 1.0);
  }
}

TEST(ProtocolProperty, ClosedForms) {
  Gen g(45);
  for (int n = 0; n < 100; ++n) {
    const Config bell = random_config(g, false);
    EXPECT_NEAR(analytic_report(bell.input, bell.channel, bell.basis, FixedK{bell.k}).total,
                2 * std::pow(bell.k * bell.a * bell.b, 2), 1e-12);
    const Config gbm = random_config(g, true);
    EXPECT_NEAR(analytic_report(gbm.input, gbm.channel, gbm.basis, FixedK{gbm.k}).total,
                4 * std::pow(gbm.k * gbm.a * gbm.b * gbm.ap * gbm.bp, 2), 1e-12);
  }
}

TEST(ProtocolProperty, PerOutcomeOptimumIsSmallestWeightSquaredTwice) {
  Gen g(46);
  for (int n = 0; n < 200; ++n) {
    const Config c = random_config(g, true);
    const double smallest = std::min({c.a, c.b, c.ap, c.bp});
    const auto s = simulate_report(c.input, c.channel, c.basis, MaxPerOutcome{});
    EXPECT_NEAR(s.total, 2 * smallest * smallest, 1e-12);
  }
}

TEST(ProtocolProperty, TotalGrowsWithK) {
  Gen g(47);
  for (int n = 0; n < 30; ++n) {
    const Config c = random_config(g, n % 2 == 0);
    double kmax = optimal_k(c.channel, c.basis, 1);
    for (int lam = 2; lam <= 4; ++lam) kmax = std::min(kmax, optimal_k(c.channel, c.basis, lam));
    double prev = 0.0;
    for (int i = 1; i <= 20; ++i) {
      const double t =
          analytic_report(c.input, c.channel, c.basis, FixedK{kmax * i / 20.0}).total;
      EXPECT_GT(t, prev);
      prev = t;
    }
  }
}

TEST(ProtocolProperty, MatchedUnitaryRange) {
  Gen g(48);
  for (int n = 0; n < 200; ++n) {
    const Complex c0 = g.complex_in_disk(1.0), c1 = g.complex_in_disk(1.0);
    const double bound = k_bound(c0, c1);
    EXPECT_TRUE(is_unitary(matched_unitary(c0, c1, g.uniform(0.0, 1.0) * bound), 1e-9));
    EXPECT_TRUE(is_unitary(matched_unitary(c0, c1, bound), 1e-9));
    EXPECT_THROW(matched_unitary(c0, c1, bound * (1 + 1e-6)), KOutOfRange);
  }
}

TEST(Fig1Test, EndpointRow) {
  const auto r = fig1_row(kInvSqrt2);
  EXPECT_NEAR(r.b, 0.70711, 1e-5);
  EXPECT_NEAR(r.p_opt, 1.0, 1e-15);
  EXPECT_NEAR(r.p_k1, 0.5, 1e-15);
  EXPECT_NEAR(r.p_ksqrt2, 1.0, 1e-15);
}

TEST(Fig1Test, InteriorRow) {
  const auto r = fig1_row(0.6);
  EXPECT_NEAR(r.p_opt, 0.72, 1e-15);
  EXPECT_NEAR(r.p_k1, 0.4608, 1e-15);
  EXPECT_NEAR(r.p_ksqrt2, 0.9216, 1e-15);
}

TEST(Fig1Test, GridAndDominance) {
  const auto rows = fig1_data(1000);
  ASSERT_EQ(rows.size(), 1000u);
  EXPECT_EQ(rows.back().b, kInvSqrt2);
  EXPECT_GT(rows.front().b, 0.0);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    EXPECT_GT(rows[i].p_opt, rows[i].p_k1);
    EXPECT_LT(rows[i].b, rows[i + 1].b);
  }
  EXPECT_THROW(fig1_data(1), InvalidValue);
  EXPECT_EQ(fig1_data(2).size(), 2u);
}

TEST(Fig1Test, CurvesMatchProtocolTotals) {
  // p_opt and p_k1 are what the protocol itself yields for K = 1/a and K = 1.
  for (double b : {0.1, 0.35, 0.6, 0.7}) {
    const auto ch = TwoQubitChannel::diagonal(std::sqrt(1 - b * b), b);
    const auto row = fig1_row(b);
    const PureInputState in(1.0, 0.0);
    EXPECT_NEAR(simulate_report(in, ch, standard_bell(), MaxGlobal{}).total, row.p_opt, 1e-12);
    EXPECT_NEAR(simulate_report(in, ch, standard_bell(), FixedK{1.0}).total, row.p_k1, 1e-12);
  }
}

}  // namespace
}  // namespace telematch
