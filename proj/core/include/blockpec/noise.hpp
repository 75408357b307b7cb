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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blockpec/pauli_z.hpp"

namespace blockpec {

enum class NoiseKind { none, uncorrelated, correlated, impure };

/// Noise inserted after a gate on the gate's support.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::none;
  double p = 0.0;
  double q = 0.0;  // impure only

  static NoiseSpec none() { return {}; }
  static NoiseSpec uncorrelated(double p) { return {NoiseKind::uncorrelated, p, 0.0}; }
  static NoiseSpec correlated(double p) { return {NoiseKind::correlated, p, 0.0}; }
  static NoiseSpec impure(double p, double q) { return {NoiseKind::impure, p, q}; }

  bool is_noiseless() const { return kind == NoiseKind::none || p == 0.0; }
  /// Throws InvalidArgument unless p is a probability and q >= 0.
  void validate() const;
  bool operator==(const NoiseSpec&) const = default;
};

std::string to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& name);

/// Fast Walsh-Hadamard transform (unnormalised) of a length-2^m vector.
void walsh_hadamard(std::span<double> values);

/// Real-weighted combination of Z-string channels on an ordered qubit
/// support. Local mask bit j corresponds to support()[j]. Covers both
/// convex noise channels and signed quasi-probability distributions.
class ZMixture {
 public:
  ZMixture() = default;
  ZMixture(std::vector<int> support, std::vector<double> coeffs);

  static ZMixture identity(std::vector<int> support);
  /// Builds the mixture whose channel eigenvalue on local X-pattern t is
  /// eigenvalues[t].
  static ZMixture from_eigenvalues(std::vector<int> support, std::vector<double> eigenvalues);

  const std::vector<int>& support() const { return support_; }
  int size() const { return static_cast<int>(support_.size()); }
  std::span<const double> coeffs() const { return coeffs_; }
  double coeff(std::uint64_t local_mask) const { return coeffs_.at(local_mask); }

  double sum() const;
  /// L1 norm of the coefficients.
  double gamma() const;
  bool is_convex(double tol = 1e-12) const;

  /// lambda(t) = sum_B coeff(B) (-1)^{|B & t|}, for every local pattern t.
  std::vector<double> eigenvalues() const;

  /// Global mask on n qubits of a local mask.
  std::uint64_t to_global(std::uint64_t local_mask) const;
  PauliZString string_of(std::uint64_t local_mask, int n) const {
    return {to_global(local_mask), n};
  }

  /// Channel composition (XOR convolution); supports must match.
  ZMixture compose(const ZMixture& other) const;

 private:
  std::vector<int> support_;
  std::vector<double> coeffs_;
};

/// Dephasing channel of the given kind on `support` (kind none gives the
/// identity). Throws UnsupportedKind for impure noise.
ZMixture make_dephasing(const NoiseSpec& spec, std::vector<int> support);

/// Exact inverse via eigenvalue inversion. Throws SingularChannel when an
/// eigenvalue has magnitude below 1e-12.
ZMixture invert_z_mixture(const ZMixture& channel);

/// First-order truncation (1+p) I - p A of the inverse of (1-p) I + p A.
ZMixture taylor_inverse(const ZMixture& channel);

double gamma_of(const ZMixture& distribution);

/// Single-qubit Pauli channel with weights on I, X, Y, Z.
struct PauliMixture1 {
  double i = 1.0, x = 0.0, y = 0.0, z = 0.0;

  double sum() const { return i + x + y + z; }
  double gamma() const;
  /// Eigenvalues on the X, Y and Z Pauli operators.
  std::array<double, 3> eigenvalues() const;
  PauliMixture1 compose(const PauliMixture1& other) const;
};

struct ImpureChannel {
  int qubit = 0;
  PauliMixture1 forward;
  /// gamma1 ((1-p) I - p(3q+1)/(3(q+1)) Z - p/(3(q+1)) (X + Y)).
  PauliMixture1 closed_form_inverse;
  /// Eigenvalue-exact inverse of `forward`.
  PauliMixture1 exact_inverse;
};

/// Dephasing with a depolarizing admixture controlled by q: q = 0 is
/// depolarizing, q -> infinity is pure dephasing.
ImpureChannel make_impure(double p, double q, int qubit);

}  // namespace blockpec
