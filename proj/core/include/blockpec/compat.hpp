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

#pragma once

#include <cstdint>
#include <vector>

#include "blockpec/circuit.hpp"
#include "blockpec/gate.hpp"
#include "blockpec/pauli_z.hpp"

namespace blockpec {

inline constexpr double kMatchTol = 1e-10;

struct PropagationOptions {
  /// Treat XCZ as commuting with every Z-string instead of using its exact
  /// conjugation. This is a modelling shortcut: XCZ does not map Z on its
  /// control to a Z-string, so results obtained with it are not exact.
  bool xcz_commutes = false;
};

/// image[s] is the local Z-string that `g` maps local string s to, for all
/// 2^arity local masks (bit j of a local mask refers to g.qubits[j]).
/// Throws NotZClosed or UnsupportedGate (composite kinds).
std::vector<std::uint64_t> conjugation_table(const GateOp& g, const PropagationOptions& opts = {});

/// s' with U Z_s U^dagger = phase * Z_{s'}. Qubits outside g pass through.
PauliZString conjugate_z_string(const GateOp& g, const PauliZString& s,
                                const PropagationOptions& opts = {});

bool is_pauli_z_compatible(const GateOp& g, const PropagationOptions& opts = {});
/// Unitary generalized permutation matrix test.
bool is_bias_preserving(const GateOp& g);
/// Stability of span{|01>,|10>} plus diagonal images of Z1, Z2, Z1Z2 on it.
/// Throws UnsupportedGate unless g has two qubits.
bool is_s1_bias_preserving(const GateOp& g);

struct GateFlags {
  bool bias_preserving = false;
  bool s1_bias_preserving = false;
  bool pauli_z_compatible = false;
};

struct CompatReport {
  std::vector<GateFlags> flags;
  /// Maximal runs of consecutive compatible ops.
  std::vector<OpRange> segments;

  bool fully_compatible() const;
};

CompatReport classify_circuit(const Circuit& c, const PropagationOptions& opts = {});

}  // namespace blockpec
