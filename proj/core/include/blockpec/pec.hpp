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
#include <string>
#include <utility>
#include <vector>

#include "blockpec/circuit.hpp"
#include "blockpec/compat.hpp"
#include "blockpec/noise.hpp"

namespace blockpec {

enum class Mode { std, blk, hybrid };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);

/// Quasi-distribution over Z-string controls that undoes the noise of one
/// gate: the inverse of its dephasing channel on the gate's support.
ZMixture layer_distribution(const GateOp& g, const NoiseSpec& spec);

/// Product of per-op layer gammas.
double gamma_std(const Circuit& c);

/// alpha(V') for every Z-string V' on n qubits, indexed by mask.
struct BlockCoefficients {
  int n = 1;
  std::vector<double> coeffs;

  double gamma() const;
  double sum() const;
  double operator[](std::uint64_t mask) const { return coeffs.at(mask); }
  ZMixture to_mixture() const;
};

inline constexpr int kMaxBlockQubits = 20;

/// Forward accumulation over a dense 2^n vector. Throws NotZClosed,
/// SingularChannel, GuardExceeded (n > 20).
BlockCoefficients block_coefficients(const Circuit& c, const PropagationOptions& opts = {});

/// Sum over every tuple of per-gate controls, each commuted to the end.
/// Test oracle; throws GuardExceeded when n*d > 16.
BlockCoefficients naive_block_coefficients(const Circuit& c, const PropagationOptions& opts = {});

double gamma_blk(const Circuit& c, const PropagationOptions& opts = {});

/// delta(W) = sum_V' alpha(V') beta_V'(W), where beta_V' expresses the
/// perfect control V' through noisy controls whose noise is `spec` on
/// supp(V').
ZMixture fold_noisy_controls(const BlockCoefficients& b, const NoiseSpec& spec);

struct PlanSegment {
  enum class Type { block, per_gate };

  Type type = Type::per_gate;
  OpRange range;
  /// Controls applied after the segment. Block segments are supported on
  /// all qubits, per-gate segments on the gate's qubits.
  ZMixture distribution;

  double gamma() const { return distribution.gamma(); }
};

struct MitigationPlan {
  int n = 1;
  Mode mode = Mode::hybrid;
  std::vector<PlanSegment> segments;
  double total_gamma = 1.0;
};

/// Every op as its own per-gate segment.
MitigationPlan std_plan(const Circuit& c);
/// One block over the whole circuit; throws NotZClosed if any op is not
/// compatible.
MitigationPlan blk_plan(const Circuit& c, const PropagationOptions& opts = {});
/// Maximal compatible runs as blocks, other ops per gate.
MitigationPlan hybrid_plan(const Circuit& c, const PropagationOptions& opts = {});
MitigationPlan make_plan(const Circuit& c, Mode mode, const PropagationOptions& opts = {});

enum class Pattern { a, b, c };

/// Closed forms (gamma_std, gamma_blk) for the three two-gate patterns.
/// Correlated noise is available for pattern b only (UnsupportedKind).
std::pair<double, double> analytic_pattern_gammas(Pattern pattern, double p, bool correlated);

}  // namespace blockpec
