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

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace blockpec {

enum class GateKind {
  X,
  Z,
  S,
  T,
  H,
  RZ,
  RZZ,
  CZ,
  CNOT,
  SWAP,
  XCZ,
  RBS,
  RY,
  CRY,
  Toffoli,
};

int arity(GateKind kind);
bool is_parameterized(GateKind kind);
/// RY and CRY are composite: analyses only ever see their expansions.
bool is_composite(GateKind kind);
std::string_view kind_name(GateKind kind);
/// Case-insensitive; throws ParseError on unknown names.
GateKind kind_from_name(std::string_view name);

/// A gate applied to an ordered tuple of distinct qubits. For controlled
/// kinds the control(s) come first and the target last.
struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;
  double angle = 0.0;

  /// Validates arity and distinctness; throws InvalidArgument.
  static GateOp make(GateKind kind, std::vector<int> qubits, double angle = 0.0);

  std::string str() const;
  bool operator==(const GateOp&) const = default;
};

/// Unitary on the gate's local qubits, big-endian: qubits[0] is the most
/// significant bit of the row/column index.
///   RZ(t)  = exp(-i t Z / 2)
///   RZZ(t) = exp(-i t Z(x)Z / 2)
///   RBS(t)|01> = cos t |01> - sin t |10>,  RBS(t)|10> = cos t |10> + sin t |01>
///   XCZ(t) = 1/2 [[1+e, 0, 1-e, 0], [0, 1+e*, 0, 1-e*], ...],  e = exp(i t/2)
///   RY(t)  = exp(-i t Y / 2)
Eigen::MatrixXcd unitary_of(const GateOp& g);

}  // namespace blockpec
