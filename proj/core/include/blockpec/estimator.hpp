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

#include <Eigen/Dense>

#include "blockpec/circuit.hpp"
#include "blockpec/pec.hpp"
#include "blockpec/simulator.hpp"

namespace blockpec {

class Observable {
 public:
  enum class Kind { pauli_z_string, diagonal_projector, dense_hermitian };

  static Observable z(const PauliZString& s);
  static Observable z_on(int n, int qubit) { return z(PauliZString::on(n, {qubit})); }
  /// Product of |bit><bit| on each listed qubit.
  static Observable projector(int n, std::vector<std::pair<int, int>> qubit_bits);
  /// Hermitian matrix on all n qubits, rescaled so its spectral norm is at
  /// most 1. Throws InvalidArgument if it is not Hermitian.
  static Observable dense(const Eigen::MatrixXcd& m);

  Kind kind() const { return kind_; }
  int num_qubits() const { return n_; }
  /// Single-shot outcome range.
  std::pair<double, double> outcome_range() const;

  double expectation(const StateVector& psi) const;
  double expectation(const DensityMatrix& rho) const;
  std::string str() const;

 private:
  Observable() = default;
  double diagonal(std::uint64_t basis) const;

  Kind kind_ = Kind::pauli_z_string;
  int n_ = 1;
  PauliZString z_;
  std::vector<std::pair<int, int>> bits_;
  Eigen::MatrixXcd dense_;
};

double ideal_expectation(const Circuit& c, const Observable& obs);
double noisy_expectation(const Circuit& c, const Observable& obs);

inline constexpr std::uint64_t kStdEnumerationLimit = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kBlkEnumerationLimit = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kHybridEnumerationLimit = std::uint64_t{1} << 20;

/// Full quasi-probability sum of noisy expectations with controls inserted.
double exact_mitigated_expectation(const Circuit& c, const Observable& obs, Mode mode,
                                   const PropagationOptions& opts = {});
double exact_mitigated_expectation(const Circuit& c, const Observable& obs,
                                   const MitigationPlan& plan);

struct EstimateOptions {
  Mode mode = Mode::hybrid;
  std::uint64_t n_samples = 1000;
  std::uint64_t seed = 0;
  /// 0: each sample contributes the exact expectation of its sampled
  /// circuit. k > 0: the mean of k single-shot outcomes.
  std::uint64_t shots = 0;
  PropagationOptions propagation;
};

inline constexpr const char* kPrngName = "mt19937_64/splitmix64-v1";

struct EstimatorReport {
  double mean = 0.0;
  double sample_variance = 0.0;
  std::uint64_t n_samples = 0;
  double gamma_used = 1.0;
  Mode mode = Mode::hybrid;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::string prng = kPrngName;
};

EstimatorReport pec_estimate(const Circuit& c, const Observable& obs, const EstimateOptions& opts);
EstimatorReport pec_estimate(const Circuit& c, const Observable& obs, const MitigationPlan& plan,
                             const EstimateOptions& opts);

/// ceil(gamma^2 / (2 delta^2) * ln(2 / epsilon)).
std::uint64_t required_samples(double gamma, double delta, double epsilon);

/// Seed of the generator used for sample `index`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace blockpec
