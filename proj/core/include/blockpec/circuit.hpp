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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "blockpec/gate.hpp"
#include "blockpec/noise.hpp"

namespace blockpec {

/// Half-open range [begin, end) of op indices.
struct OpRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const OpRange&) const = default;
};

/// Ordered gate list on n qubits. Every op carries the noise channel that
/// follows it; each op is its own layer.
class Circuit {
 public:
  explicit Circuit(int num_qubits = 1, NoiseSpec default_noise = {});

  int num_qubits() const { return n_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }
  const std::vector<GateOp>& ops() const { return ops_; }
  const GateOp& op(std::size_t i) const { return ops_.at(i); }
  const NoiseSpec& noise(std::size_t i) const { return noise_.at(i); }
  const NoiseSpec& default_noise() const { return default_noise_; }

  Circuit& add(GateOp op);
  Circuit& add(GateOp op, NoiseSpec noise);
  Circuit& add(GateKind kind, std::vector<int> qubits, double angle = 0.0);
  /// Appends every op of `other` (same width) with its noise tags.
  Circuit& append(const Circuit& other);

  /// Replaces the noise on every op and the default for future ops.
  void set_noise(const NoiseSpec& spec);
  void set_noise(std::size_t i, const NoiseSpec& spec) { noise_.at(i) = spec; }

  std::vector<OpRange> layers() const;
  Circuit slice(OpRange range) const;

 private:
  int n_;
  NoiseSpec default_noise_;
  std::vector<GateOp> ops_;
  std::vector<NoiseSpec> noise_;
};

/// Replaces RY and CRY by Z-rotations, S, H and CNOT:
///   RY(t)          = S H RZ(t) H S^dagger   (S^dagger emitted as RZ(-pi/2))
///   CRY(t)_{j,k}   = RY(t/2)_k CNOT_{j,k} RY(-t/2)_k CNOT_{j,k}
Circuit expand_composites(const Circuit& c);
/// SWAP -> CNOT(a,b) CNOT(b,a) CNOT(a,b).
Circuit decompose_swaps(const Circuit& c);
/// RBS(t)_{j,k} -> CNOT_{j,k} XCZ(t)_{j,k} CNOT_{j,k}. The sequence is the
/// bias-preserving-friendly form used by the RBS circuit families; note it
/// is not unitarily equal to RBS(t).
Circuit expand_rbs(const Circuit& c);

/// Text format, one op per line:
///   qubits=<n>
///   KIND q0[,q1[,q2]][;theta=<radians>]
/// '#' starts a comment. Noise tags are not part of the format.
Circuit parse_circuit(std::string_view text, const NoiseSpec& noise = {});
std::string to_text(const Circuit& c);

}  // namespace blockpec
