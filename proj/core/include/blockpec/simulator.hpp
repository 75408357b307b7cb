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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "blockpec/gate.hpp"
#include "blockpec/noise.hpp"
#include "blockpec/pauli_z.hpp"

namespace blockpec {

inline constexpr int kMaxStatevectorQubits = 14;
inline constexpr int kMaxDensityQubits = 10;

using Amplitude = std::complex<double>;

/// Basis-index bit carrying qubit q. Qubit 0 is the most significant.
inline std::uint64_t basis_bit(int q, int n) { return std::uint64_t{1} << (n - 1 - q); }
/// Basis-index bitmask of the qubits in a Z-string.
std::uint64_t basis_mask(const PauliZString& s);

class StateVector {
 public:
  /// |0...0>; throws GuardExceeded above kMaxStatevectorQubits.
  explicit StateVector(int n);

  int num_qubits() const { return n_; }
  const std::vector<Amplitude>& amplitudes() const { return amp_; }
  Amplitude amplitude(std::uint64_t basis) const { return amp_.at(basis); }

  void apply(const GateOp& g);
  void apply(const Eigen::MatrixXcd& u, const std::vector<int>& qubits);
  void apply_z(const PauliZString& s);

 private:
  int n_;
  std::vector<Amplitude> amp_;
};

class DensityMatrix {
 public:
  /// |0...0><0...0|; throws GuardExceeded above kMaxDensityQubits.
  explicit DensityMatrix(int n);

  int num_qubits() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }
  Amplitude operator()(std::uint64_t row, std::uint64_t col) const { return rho_[row * dim() + col]; }
  const std::vector<Amplitude>& data() const { return rho_; }
  Eigen::MatrixXcd matrix() const;
  double trace() const;

  void apply(const GateOp& g);
  void apply(const Eigen::MatrixXcd& u, const std::vector<int>& qubits);
  /// rho -> sum_B c(B) Z_B rho Z_B for any real (possibly signed) mixture.
  void apply_channel(const ZMixture& m);
  void apply_z(const PauliZString& s);
  /// Single-qubit Pauli mixture (impure noise).
  void apply_pauli(const PauliMixture1& m, int qubit);
  /// Noise of a NoiseSpec after gate g.
  void apply_noise(const NoiseSpec& spec, const std::vector<int>& qubits);

 private:
  void scale_by_pattern(const std::vector<double>& factor);

  int n_;
  std::vector<Amplitude> rho_;
};

}  // namespace blockpec
