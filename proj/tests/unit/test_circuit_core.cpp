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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "blockpec/circuit.hpp"
#include "blockpec/compat.hpp"
#include "blockpec/errors.hpp"
#include "oracle.hpp"

using namespace blockpec;

namespace {

const GateKind kAllKinds[] = {GateKind::X,   GateKind::Z,    GateKind::S,   GateKind::T,
                              GateKind::H,   GateKind::RZ,   GateKind::RZZ, GateKind::CZ,
                              GateKind::CNOT, GateKind::SWAP, GateKind::XCZ, GateKind::RBS,
                              GateKind::RY,  GateKind::CRY,  GateKind::Toffoli};

GateOp first_qubits(GateKind k, double angle = 0.7) {
  std::vector<int> q;
  for (int i = 0; i < arity(k); ++i) q.push_back(i);
  return GateOp::make(k, q, angle);
}

}  // namespace

TEST(PauliZString, ComposesByXor) {
  const auto a = PauliZString::on(4, {0, 2});
  const auto b = PauliZString::on(4, {2, 3});
  EXPECT_EQ((a * b).mask, 0b1001u);
  EXPECT_TRUE((a * a).is_identity());
  EXPECT_EQ(a.str(), "ZIZI");
  EXPECT_EQ(a.weight(), 2);
}

TEST(Gate, EveryKindIsUnitary) {
  for (GateKind k : kAllKinds) {
    for (double angle : {0.0, 0.3, 2.1, -1.7}) {
      const auto u = unitary_of(first_qubits(k, angle));
      const auto dim = u.rows();
      EXPECT_LE((u * u.adjoint() - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-12)
          << kind_name(k);
    }
  }
}

TEST(Gate, RbsActsOnSingleExcitations) {
  const double t = 0.61;
  const auto u = unitary_of(GateOp::make(GateKind::RBS, {0, 1}, t));
  // |01> is index 1, |10> is index 2.
  EXPECT_NEAR(u(1, 1).real(), std::cos(t), 1e-15);
  EXPECT_NEAR(u(2, 1).real(), -std::sin(t), 1e-15);
  EXPECT_NEAR(u(2, 2).real(), std::cos(t), 1e-15);
  EXPECT_NEAR(u(1, 2).real(), std::sin(t), 1e-15);
  EXPECT_NEAR(std::abs(u(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(3, 3) - 1.0), 0.0, 1e-15);
  const auto id = unitary_of(GateOp::make(GateKind::RBS, {0, 1}, 0.0));
  EXPECT_LE((id - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Gate, XczCornerEntry) {
  const double t = 1.3;
  const auto u = unitary_of(GateOp::make(GateKind::XCZ, {0, 1}, t));
  const std::complex<double> expected = (1.0 + std::polar(1.0, t / 2)) / 2.0;
  EXPECT_NEAR(std::abs(u(0, 0) - expected), 0.0, 1e-15);
}

TEST(Gate, RzAndRzzConventions) {
  const double t = 0.9;
  const auto rz = unitary_of(GateOp::make(GateKind::RZ, {0}, t));
  EXPECT_NEAR(std::abs(rz(0, 0) - std::polar(1.0, -t / 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rz(1, 1) - std::polar(1.0, t / 2)), 0.0, 1e-15);
  const auto rzz = unitary_of(GateOp::make(GateKind::RZZ, {0, 1}, t));
  EXPECT_NEAR(std::abs(rzz(1, 1) - std::polar(1.0, t / 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rzz(3, 3) - std::polar(1.0, -t / 2)), 0.0, 1e-15);
}

TEST(Gate, CompositeExpansionsMatchTheirUnitaries) {
  for (double t : {0.4, -2.2, 3.0}) {
    for (GateKind k : {GateKind::RY, GateKind::CRY}) {
      Circuit c(2);
      c.add(first_qubits(k, t));
      const auto expanded = expand_composites(c);
      for (const auto& g : expanded.ops()) EXPECT_FALSE(is_composite(g.kind));
      const auto want = oracle::circuit_unitary(c);
      const auto got = oracle::circuit_unitary(expanded);
      // Equal up to a global phase.
      const std::complex<double> phase = got(0, 0) / want(0, 0);
      EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
      EXPECT_LE((got - phase * want).cwiseAbs().maxCoeff(), 1e-12) << kind_name(k) << " " << t;
    }
  }
}

TEST(Gate, MakeRejectsMalformedOps) {
  EXPECT_THROW(GateOp::make(GateKind::CNOT, {0}), InvalidArgument);
  EXPECT_THROW(GateOp::make(GateKind::CNOT, {1, 1}), InvalidArgument);
  EXPECT_THROW(GateOp::make(GateKind::X, {-1}), InvalidArgument);
  EXPECT_THROW(kind_from_name("FOO"), ParseError);
  EXPECT_EQ(kind_from_name("cx"), GateKind::CNOT);
}

TEST(CircuitText, RoundTrips) {
  const std::string text =
      "# sample\n"
      "qubits=3\n"
      "X 0\n"
      "RZZ 1,2;theta=0.25   # trailing comment\n"
      "\n"
      "TOFFOLI 0,1,2\n"
      "RBS 0,1;theta=-1.5\n";
  const Circuit c = parse_circuit(text);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.num_qubits(), 3);
  EXPECT_EQ(c.op(1).kind, GateKind::RZZ);
  EXPECT_DOUBLE_EQ(c.op(1).angle, 0.25);
  const Circuit again = parse_circuit(to_text(c));
  EXPECT_EQ(again.ops(), c.ops());
  EXPECT_EQ(to_text(again), to_text(c));
}

TEST(CircuitText, ReportsLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("qubits=2\nX 0\nFOO 1\n"), 3);
  EXPECT_EQ(line_of("qubits=2\nCNOT 0,5\n"), 2);
  EXPECT_EQ(line_of("qubits=2\nRZ 0\n"), 2);
  EXPECT_EQ(line_of("qubits=2\nX 0;theta=1\n"), 2);
  EXPECT_EQ(line_of("# header missing\nX 0\n"), 2);
  EXPECT_THROW(parse_circuit(""), ParseError);
}

TEST(Conjugation, ControlZPassesThroughCnot) {
  const auto g = GateOp::make(GateKind::CNOT, {1, 2});
  EXPECT_EQ(conjugate_z_string(g, PauliZString::on(3, {1})), PauliZString::on(3, {1}));
}

TEST(Conjugation, TargetZSpreadsToControl) {
  const auto g = GateOp::make(GateKind::CNOT, {1, 2});
  EXPECT_EQ(conjugate_z_string(g, PauliZString::on(3, {2})), PauliZString::on(3, {1, 2}));
  EXPECT_EQ(conjugate_z_string(g, PauliZString::on(3, {0})), PauliZString::on(3, {0}));
}

TEST(Conjugation, ToffoliTargetIsNotClosed) {
  const auto g = GateOp::make(GateKind::Toffoli, {0, 1, 2});
  EXPECT_THROW(conjugate_z_string(g, PauliZString::on(3, {2})), NotZClosed);
  try {
    conjugate_z_string(g, PauliZString::on(3, {2}));
  } catch (const NotZClosed& e) {
    EXPECT_EQ(e.input_string(), "IIZ");
  }
  EXPECT_TRUE(is_bias_preserving(g));
  EXPECT_FALSE(is_pauli_z_compatible(g));
}

TEST(Conjugation, XIgnoresSign) {
  const auto g = GateOp::make(GateKind::X, {0});
  EXPECT_EQ(conjugate_z_string(g, PauliZString::on(1, {0})), PauliZString::on(1, {0}));
}

TEST(Conjugation, SwapExchangesQubits) {
  const auto g = GateOp::make(GateKind::SWAP, {0, 2});
  EXPECT_EQ(conjugate_z_string(g, PauliZString::on(3, {0, 1})), PauliZString::on(3, {1, 2}));
}

TEST(Conjugation, CompositeKindsAreRejected) {
  EXPECT_THROW(conjugate_z_string(GateOp::make(GateKind::RY, {0}, 0.2), PauliZString::on(1, {0})),
               UnsupportedGate);
}

TEST(Conjugation, XczMovesControlZOffTheZGroup) {
  const auto g = GateOp::make(GateKind::XCZ, {0, 1}, 0.8);
  EXPECT_THROW(conjugate_z_string(g, PauliZString::on(2, {0})), NotZClosed);
  EXPECT_EQ(conjugate_z_string(g, PauliZString::on(2, {1})), PauliZString::on(2, {1}));
  PropagationOptions commuting;
  commuting.xcz_commutes = true;
  EXPECT_EQ(conjugate_z_string(g, PauliZString::on(2, {0}), commuting), PauliZString::on(2, {0}));
  EXPECT_TRUE(is_pauli_z_compatible(GateOp::make(GateKind::XCZ, {0, 1}, 0.0)));
}

// For every compatible kind and local string: U Z_s U^dagger = phase Z_s'.
TEST(ConjugationProperty, MatchesMatrixConjugation) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (GateKind k : {GateKind::X, GateKind::Z, GateKind::S, GateKind::T, GateKind::RZ, GateKind::RZZ,
                     GateKind::CZ, GateKind::CNOT, GateKind::SWAP}) {
    const int n = 3;
    std::vector<int> q = {2, 0, 1};
    q.resize(static_cast<std::size_t>(arity(k)));
    const auto g = GateOp::make(k, q, angle(rng));
    const auto u = oracle::embed(unitary_of(g), g.qubits, n);
    for (std::uint64_t s = 0; s < 8; ++s) {
      const auto image = conjugate_z_string(g, PauliZString{s, n});
      const oracle::Mat lhs = u * oracle::z_string(s, n);
      const oracle::Mat rhs = oracle::z_string(image.mask, n) * u;
      const std::complex<double> phase = (rhs.adjoint() * lhs).trace() / 8.0;
      EXPECT_NEAR(std::abs(phase), 1.0, 1e-10);
      EXPECT_LE((lhs - phase * rhs).cwiseAbs().maxCoeff(), 1e-10) << kind_name(k) << " s=" << s;
    }
  }
}

TEST(ConjugationProperty, SelfInverseGatesAreInvolutive) {
  for (GateKind k : {GateKind::CNOT, GateKind::SWAP, GateKind::X, GateKind::Z, GateKind::CZ}) {
    std::vector<int> q = {1, 3};
    q.resize(static_cast<std::size_t>(arity(k)));
    const auto g = GateOp::make(k, q);
    for (std::uint64_t s = 0; s < 16; ++s) {
      const PauliZString z{s, 4};
      EXPECT_EQ(conjugate_z_string(g, conjugate_z_string(g, z)), z);
    }
  }
}

TEST(BiasPreserving, Classification) {
  EXPECT_TRUE(is_bias_preserving(GateOp::make(GateKind::CNOT, {0, 1})));
  EXPECT_FALSE(is_bias_preserving(GateOp::make(GateKind::H, {0})));
  EXPECT_FALSE(is_bias_preserving(GateOp::make(GateKind::RBS, {0, 1}, std::numbers::pi / 4)));
  EXPECT_TRUE(is_bias_preserving(GateOp::make(GateKind::RZZ, {0, 1}, 0.4)));
}

TEST(S1BiasPreserving, Classification) {
  // CNOT maps |10> to |11>, leaving the single-excitation subspace.
  EXPECT_FALSE(is_s1_bias_preserving(GateOp::make(GateKind::CNOT, {0, 1})));
  EXPECT_TRUE(is_s1_bias_preserving(GateOp::make(GateKind::XCZ, {0, 1}, 0.0)));
  EXPECT_TRUE(is_s1_bias_preserving(GateOp::make(GateKind::SWAP, {0, 1})));
  EXPECT_TRUE(is_s1_bias_preserving(GateOp::make(GateKind::RBS, {0, 1}, std::numbers::pi / 2)));
  EXPECT_THROW(is_s1_bias_preserving(GateOp::make(GateKind::X, {0})), UnsupportedGate);
}

// A generic RBS angle keeps the subspace but rotates Z1 off the diagonal:
// on span{|01>,|10>} the image of Z1 is cos(2t) sigma_z + sin(2t) sigma_x.
TEST(S1BiasPreserving, GenericRbsRotatesPhaseFlips) {
  const double t = 0.7;
  const auto u = unitary_of(GateOp::make(GateKind::RBS, {0, 1}, t));
  Eigen::Matrix2cd block;
  block << u(1, 1), u(1, 2), u(2, 1), u(2, 2);
  Eigen::Matrix2cd z1;
  z1 << 1, 0, 0, -1;
  const Eigen::Matrix2cd image = block * z1 * block.adjoint();
  EXPECT_NEAR(std::abs(image(0, 1)), std::abs(std::sin(2 * t)), 1e-12);
  EXPECT_FALSE(is_s1_bias_preserving(GateOp::make(GateKind::RBS, {0, 1}, t)));
}

TEST(ClassifyCircuit, MixedCircuitSegments) {
  Circuit c(2);
  c.add(GateKind::CNOT, {0, 1});
  c.add(GateKind::RZZ, {0, 1}, 0.3);
  c.add(GateKind::H, {0});
  c.add(GateKind::CZ, {0, 1});
  const auto r = classify_circuit(c);
  ASSERT_EQ(r.flags.size(), 4u);
  EXPECT_TRUE(r.flags[0].pauli_z_compatible);
  EXPECT_TRUE(r.flags[1].pauli_z_compatible);
  EXPECT_FALSE(r.flags[2].pauli_z_compatible);
  EXPECT_TRUE(r.flags[3].pauli_z_compatible);
  ASSERT_EQ(r.segments.size(), 2u);
  EXPECT_EQ(r.segments[0], (OpRange{0, 2}));
  EXPECT_EQ(r.segments[1], (OpRange{3, 4}));
}

TEST(ClassifyCircuit, EmptyCircuitHasNoSegments) {
  EXPECT_TRUE(classify_circuit(Circuit(3)).segments.empty());
}

TEST(ClassifyCircuit, CompositesAreNotCompatible) {
  Circuit c(2);
  c.add(GateKind::CRY, {0, 1}, 0.5);
  EXPECT_FALSE(classify_circuit(c).flags[0].pauli_z_compatible);
}

TEST(ClassifyCircuitProperty, SegmentsCoverExactlyCompatibleOps) {
  std::mt19937_64 rng(5);
  const GateKind pool[] = {GateKind::H, GateKind::CNOT, GateKind::RZ, GateKind::Toffoli,
                           GateKind::XCZ, GateKind::CZ, GateKind::T};
  for (int trial = 0; trial < 100; ++trial) {
    Circuit c(3);
    const int d = static_cast<int>(rng() % 12);
    for (int i = 0; i < d; ++i) {
      const GateKind k = pool[rng() % 7];
      std::vector<int> q = {0, 1, 2};
      std::shuffle(q.begin(), q.end(), rng);
      q.resize(static_cast<std::size_t>(arity(k)));
      c.add(k, q, 0.4);
    }
    const auto r = classify_circuit(c);
    std::vector<bool> covered(c.size(), false);
    for (std::size_t s = 0; s < r.segments.size(); ++s) {
      if (s > 0) EXPECT_LT(r.segments[s - 1].end, r.segments[s].begin);
      for (auto i = r.segments[s].begin; i < r.segments[s].end; ++i) covered[i] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(covered[i], r.flags[i].pauli_z_compatible);
  }
}

TEST(CircuitTransforms, SwapDecomposition) {
  Circuit c(3);
  c.add(GateKind::SWAP, {0, 2});
  const Circuit d = decompose_swaps(c);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_LE((oracle::circuit_unitary(c) - oracle::circuit_unitary(d)).cwiseAbs().maxCoeff(), 1e-12);
}

// The three-gate replacement is built from compatible-looking pieces but
// is not the RBS unitary.
TEST(CircuitTransforms, RbsExpansionIsNotUnitarilyEqual) {
  Circuit c(2);
  c.add(GateKind::RBS, {0, 1}, 0.9);
  const Circuit e = expand_rbs(c);
  ASSERT_EQ(e.size(), 3u);
  const auto a = oracle::circuit_unitary(c);
  const auto b = oracle::circuit_unitary(e);
  const double overlap = std::abs((a.adjoint() * b).trace()) / 4.0;
  EXPECT_LT(overlap, 1.0 - 1e-3);
}
