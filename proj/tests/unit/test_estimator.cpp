// Copyright 2026 The blockpec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "blockpec/errors.hpp"
#include "blockpec/estimator.hpp"
#include "blockpec/generators.hpp"
#include "oracle.hpp"

using namespace blockpec;

namespace {

Circuit random_circuit(int n, int d, double p, bool compatible_only, std::mt19937_64& rng) {
  static constexpr GateKind compatible[] = {GateKind::X,  GateKind::Z,    GateKind::S,
                                            GateKind::RZ, GateKind::RZZ,  GateKind::CZ,
                                            GateKind::CNOT, GateKind::SWAP};
  static constexpr GateKind mixed[] = {GateKind::H,   GateKind::X,   GateKind::RZ,
                                       GateKind::CNOT, GateKind::RZZ, GateKind::H,
                                       GateKind::CZ,  GateKind::T};
  std::uniform_real_distribution<double> angle(0.0, 6.283);
  Circuit c(n, NoiseSpec::uncorrelated(p));
  while (static_cast<int>(c.size()) < d) {
    const GateKind k = compatible_only ? compatible[rng() % 8] : mixed[rng() % 8];
    if (arity(k) > n) continue;
    std::vector<int> q(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = i;
    std::shuffle(q.begin(), q.end(), rng);
    q.resize(static_cast<std::size_t>(arity(k)));
    c.add(k, q, angle(rng));
  }
  return c;
}

double oracle_ideal_z(const Circuit& c, std::uint64_t mask) {
  const auto u = oracle::circuit_unitary(c);
  const oracle::Mat psi = u.col(0);
  return (psi.adjoint() * oracle::z_string(mask, c.num_qubits()) * psi)(0, 0).real();
}

}  // namespace

TEST(Observable, DenseIsNormalized) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = -1.5;
  const auto o = Observable::dense(m);
  StateVector psi(1);
  EXPECT_NEAR(o.expectation(psi), 1.0, 1e-15);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 1) = 1.0;
  EXPECT_THROW(Observable::dense(bad), InvalidArgument);
}

TEST(IdealExpectation, Basics) {
  EXPECT_DOUBLE_EQ(ideal_expectation(Circuit(2), Observable::z_on(2, 0)), 1.0);
  Circuit x(2);
  x.add(GateKind::X, {0});
  EXPECT_DOUBLE_EQ(ideal_expectation(x, Observable::z_on(2, 0)), -1.0);
  EXPECT_DOUBLE_EQ(ideal_expectation(x, Observable::z_on(2, 1)), 1.0);
}

TEST(IdealExpectation, RbsOnSingleExcitation) {
  const double t = 0.83;
  Circuit c(2);
  c.add(GateKind::X, {0});
  c.add(GateKind::RBS, {0, 1}, t);
  EXPECT_NEAR(ideal_expectation(c, Observable::projector(2, {{0, 0}, {1, 1}})), std::pow(std::sin(t), 2), 1e-15);
}

TEST(IdealExpectation, MatchesKroneckerOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 4;
    const Circuit c = random_circuit(n, 8, 0.0, false, rng);
    const std::uint64_t mask = rng() % (std::uint64_t{1} << n);
    EXPECT_NEAR(ideal_expectation(c, Observable::z(PauliZString{mask, n})), oracle_ideal_z(c, mask), 1e-12);
  }
}

TEST(IdealExpectation, GuardsWidth) {
  EXPECT_THROW(ideal_expectation(Circuit(15), Observable::z_on(15, 0)), GuardExceeded);
  EXPECT_THROW(noisy_expectation(Circuit(11), Observable::z_on(11, 0)), GuardExceeded);
}

TEST(NoisyExpectation, DephasedPlusState) {
  Circuit c(1, NoiseSpec::uncorrelated(0.1));
  c.add(GateKind::H, {0});
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  EXPECT_NEAR(noisy_expectation(c, Observable::dense(x)), 0.8, 1e-15);
}

TEST(NoisyExpectation, DiagonalStatesIgnoreDephasing) {
  Circuit c(2, NoiseSpec::uncorrelated(0.1));
  c.add(GateKind::X, {0});
  c.add(GateKind::CNOT, {0, 1});
  EXPECT_NEAR(noisy_expectation(c, Observable::z(PauliZString::on(2, {1}))), -1.0, 1e-15);
  EXPECT_NEAR(noisy_expectation(c, Observable::z(PauliZString::on(2, {0, 1}))), 1.0, 1e-15);
}

TEST(NoisyExpectation, MatchesKroneckerOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const Circuit c = random_circuit(n, 6, 0.08, false, rng);
    const auto rho = oracle::noisy_state(c, 0.08);
    Eigen::MatrixXcd o = Eigen::MatrixXcd::Random(1 << n, 1 << n);
    o = (o + o.adjoint()).eval();
    const auto obs = Observable::dense(o);
    DensityMatrix dm(n);
    for (const auto& g : c.ops()) {
      dm.apply(g);
      dm.apply_noise(c.noise(0), g.qubits);
    }
    EXPECT_LE((dm.matrix() - rho).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(noisy_expectation(c, obs), obs.expectation(dm), 1e-12);
  }
}

TEST(NoisyExpectation, ZeroRateEqualsIdeal) {
  std::mt19937_64 rng(19);
  const Circuit c = random_circuit(3, 10, 0.0, false, rng);
  const auto obs = Observable::z(PauliZString::on(3, {0, 2}));
  EXPECT_NEAR(noisy_expectation(c, obs), ideal_expectation(c, obs), 1e-12);
}

TEST(ExactMitigation, PatternBAllModes) {
  const Circuit c = gen_pattern(Pattern::b, 0.37, NoiseSpec::uncorrelated(0.1));
  Circuit prepared(2, NoiseSpec::uncorrelated(0.1));
  prepared.add(GateKind::H, {0});
  prepared.add(GateKind::H, {1});
  prepared.append(c);
  const auto obs = Observable::z_on(2, 1);
  for (const Circuit* circ : {&c, static_cast<const Circuit*>(&prepared)}) {
    const double ideal = ideal_expectation(*circ, obs);
    EXPECT_NEAR(exact_mitigated_expectation(*circ, obs, Mode::std), ideal, 1e-10);
    EXPECT_NEAR(exact_mitigated_expectation(*circ, obs, Mode::hybrid), ideal, 1e-10);
  }
  EXPECT_NEAR(exact_mitigated_expectation(c, obs, Mode::blk), ideal_expectation(c, obs), 1e-10);
}

TEST(ExactMitigation, UnbiasedOnRandomCircuits) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const int d = 1 + static_cast<int>(rng() % 6);
    const double p = trial % 2 ? 0.1 : 0.01;
    const bool compatible = trial % 3 != 0;
    Circuit c(n, NoiseSpec::uncorrelated(p));
    for (int q = 0; q < n; ++q) c.add(GateKind::H, {q});
    c.append(random_circuit(n, d, p, compatible, rng));
    Eigen::MatrixXcd o = Eigen::MatrixXcd::Random(1 << n, 1 << n);
    const auto obs = Observable::dense(o + o.adjoint());
    const double ideal = ideal_expectation(c, obs);
    EXPECT_NEAR(exact_mitigated_expectation(c, obs, Mode::std), ideal, 1e-10);
    EXPECT_NEAR(exact_mitigated_expectation(c, obs, Mode::hybrid), ideal, 1e-10);
    const Circuit tail = c.slice({static_cast<std::size_t>(n), c.size()});
    if (compatible) {
      const double ideal_tail = ideal_expectation(tail, obs);
      EXPECT_NEAR(exact_mitigated_expectation(tail, obs, Mode::blk), ideal_tail, 1e-10);
    }
  }
}

// Treating XCZ as commuting gives a cheaper plan whose expectation is
// biased, because XCZ does not keep Z on its control inside the Z group.
TEST(ExactMitigation, CommutingXczModelIsBiased) {
  const Circuit c = gen_rbs_pyramid(3, std::vector<double>{0.4, 1.1, -0.7}, NoiseSpec::uncorrelated(0.05));
  const auto obs = Observable::projector(3, {{0, 1}});
  const double ideal = ideal_expectation(c, obs);
  EXPECT_NEAR(exact_mitigated_expectation(c, obs, Mode::hybrid), ideal, 1e-10);
  PropagationOptions commuting;
  commuting.xcz_commutes = true;
  const double biased = exact_mitigated_expectation(c, obs, Mode::blk, commuting);
  EXPECT_GT(std::abs(biased - ideal), 1e-4);
}

TEST(ExactMitigation, Guards) {
  Circuit c(3, NoiseSpec::uncorrelated(0.1));
  for (int i = 0; i < 9; ++i) c.add(GateKind::CZ, {i % 3, (i + 1) % 3});
  EXPECT_THROW(exact_mitigated_expectation(c, Observable::z_on(3, 0), Mode::std), GuardExceeded);
  EXPECT_NO_THROW(exact_mitigated_expectation(c, Observable::z_on(3, 0), Mode::blk));
  Circuit h(1, NoiseSpec::uncorrelated(0.1));
  h.add(GateKind::H, {0});
  EXPECT_THROW(exact_mitigated_expectation(h, Observable::z_on(1, 0), Mode::blk), NotZClosed);
}

TEST(PecEstimate, NoiselessIsExact) {
  std::mt19937_64 rng(29);
  const Circuit c = random_circuit(3, 8, 0.0, false, rng);
  const auto obs = Observable::z_on(3, 1);
  const auto r = pec_estimate(c, obs, {Mode::std, 50, 4});
  EXPECT_NEAR(r.mean, ideal_expectation(c, obs), 1e-12);
  EXPECT_NEAR(r.sample_variance, 0.0, 1e-24);
  EXPECT_EQ(r.n_samples, 50u);
  EXPECT_DOUBLE_EQ(r.gamma_used, 1.0);
}

TEST(PecEstimate, ZeroSamplesRejected) {
  EXPECT_THROW(pec_estimate(Circuit(1), Observable::z_on(1, 0), {Mode::std, 0, 1}), InvalidSamples);
}

TEST(PecEstimate, SeedDeterminism) {
  const Circuit c = gen_pattern(Pattern::c, 0.9, NoiseSpec::uncorrelated(0.1));
  const auto obs = Observable::z_on(3, 1);
  for (Mode m : {Mode::std, Mode::blk, Mode::hybrid}) {
    const auto a = pec_estimate(c, obs, {m, 300, 99});
    const auto b = pec_estimate(c, obs, {m, 300, 99});
    EXPECT_EQ(std::memcmp(&a.mean, &b.mean, sizeof(double)), 0);
    EXPECT_EQ(std::memcmp(&a.sample_variance, &b.sample_variance, sizeof(double)), 0);
    const auto other = pec_estimate(c, obs, {m, 300, 100});
    EXPECT_NE(a.mean, other.mean);
  }
  EXPECT_NE(sample_seed(1, 0), sample_seed(1, 1));
  EXPECT_NE(sample_seed(1, 0), sample_seed(2, 0));
}

TEST(PecEstimate, ConvergesToIdeal) {
  Circuit c(2, NoiseSpec::uncorrelated(0.1));
  c.add(GateKind::H, {0});
  c.append(gen_pattern(Pattern::b, 0.6, NoiseSpec::uncorrelated(0.1)));
  const auto obs = Observable::z_on(2, 1);
  const double ideal = ideal_expectation(c, obs);
  for (Mode m : {Mode::std, Mode::hybrid}) {
    const auto r = pec_estimate(c, obs, {m, 20000, 5});
    EXPECT_NEAR(r.mean, ideal, 5.0 * std::sqrt(r.sample_variance / 20000.0)) << to_string(m);
  }
}

TEST(PecEstimate, ShotsStayBoundedAndUnbiased) {
  Circuit c(1, NoiseSpec::uncorrelated(0.1));
  c.add(GateKind::H, {0});
  c.add(GateKind::RZ, {0}, 0.4);
  c.add(GateKind::H, {0});
  const auto obs = Observable::z_on(1, 0);
  EstimateOptions opts{Mode::std, 40000, 8};
  opts.shots = 1;
  const auto r = pec_estimate(c, obs, opts);
  const double ideal = ideal_expectation(c, obs);
  EXPECT_NEAR(r.mean, ideal, 5.0 * std::sqrt(r.sample_variance / 40000.0));
  // Every sample value is +/- gamma.
  EXPECT_LE(r.sample_variance, r.gamma_used * r.gamma_used * 1.01);
}

TEST(PecEstimate, TrajectoryPathAboveDensityLimit) {
  const int n = 11;
  Circuit c(n, NoiseSpec::uncorrelated(0.05));
  c.add(GateKind::H, {0});
  c.add(GateKind::CNOT, {0, 1});
  c.add(GateKind::H, {0});
  const auto obs = Observable::z_on(n, 0);
  const auto r = pec_estimate(c, obs, {Mode::hybrid, 20000, 3});
  EXPECT_NEAR(r.mean, ideal_expectation(c, obs), 5.0 * std::sqrt(r.sample_variance / 20000.0) + 1e-12);
}

TEST(RequiredSamples, Values) {
  EXPECT_EQ(required_samples(1.0, 0.1, 0.05), 185u);
  EXPECT_EQ(required_samples(2.0, 0.1, 0.05), 738u);
  EXPECT_EQ(required_samples(1.0, 0.1, 2.0), 0u);
  EXPECT_THROW(required_samples(0.5, 0.1, 0.05), InvalidArgument);
  EXPECT_THROW(required_samples(1.0, 0.0, 0.05), InvalidArgument);
  EXPECT_THROW(required_samples(1.0, 0.1, 0.0), InvalidArgument);
  EXPECT_THROW(required_samples(1.0, 0.1, 2.5), InvalidArgument);
}

TEST(RequiredSamples, MatchesFormula) {
  for (double g : {1.0, 1.3, 2.7})
    for (double d : {0.01, 0.05, 0.2})
      for (double e : {0.01, 0.05, 0.5}) {
        const double bound = g * g / (2 * d * d) * std::log(2 / e);
        const auto s = required_samples(g, d, e);
        EXPECT_GE(static_cast<double>(s), bound);
        EXPECT_LT(static_cast<double>(s) - 1.0, bound);
      }
}

// Matched seeds, pattern U_(b) embedded after Hadamards.
TEST(PecEstimate, BlockVarianceNoLargerOnPatternB) {
  Circuit c(2, NoiseSpec::uncorrelated(0.1));
  c.add(GateOp::make(GateKind::H, {0}), NoiseSpec::none());
  c.add(GateOp::make(GateKind::H, {1}), NoiseSpec::none());
  const auto obs = Observable::z(PauliZString::on(2, {0, 1}));
  int wins = 0;
  const int trials = 50;
  for (int t = 0; t < trials; ++t) {
    Circuit full = c;
    full.append(gen_pattern(Pattern::b, 0.3 + 0.1 * t, NoiseSpec::uncorrelated(0.1)));
    const auto s = pec_estimate(full, obs, {Mode::std, 1000, static_cast<std::uint64_t>(t)});
    const auto h = pec_estimate(full, obs, {Mode::hybrid, 1000, static_cast<std::uint64_t>(t)});
    if (h.sample_variance <= s.sample_variance) ++wins;
  }
  EXPECT_GE(wins, 45);
}
