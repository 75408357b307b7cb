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
#include <string>
#include <utility>
#include <vector>

#include "blockpec/circuit.hpp"
#include "blockpec/generators.hpp"
#include "blockpec/noise.hpp"

namespace blockpec {

enum class Family { random_bp, swap_network, rbs_pyramid, option_payoff, unary_loader };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

struct ExperimentConfig {
  Family family = Family::rbs_pyramid;
  int n_min = 4;
  int n_max = 4;
  double depth_factor = 1.0;
  Interaction interaction = Interaction::rzz;
  NoiseSpec noise = NoiseSpec::uncorrelated(0.001);
  std::vector<std::uint64_t> seeds = {0};
  std::string output_path;
  PropagationOptions propagation;

  /// Throws InvalidArgument.
  void validate() const;
};

/// The circuit a config produces for width n and seed. For the unary
/// loader family the vector is drawn from the seed and RBS gates are
/// expanded like the pyramid's.
Circuit build_family_circuit(const ExperimentConfig& cfg, int n, std::uint64_t seed);

struct GainRow {
  std::string family;
  int n = 0;
  /// Number of ops.
  std::size_t depth = 0;
  std::uint64_t seed = 0;
  double gamma_std = 1.0;
  double gamma_blk = 1.0;
  double gain = 1.0;
};

/// One row per (n, seed) in that order. gamma_blk is the hybrid plan's
/// total gamma, equal to the block gamma when the circuit is compatible.
std::vector<GainRow> run_gain_experiment(const ExperimentConfig& cfg);

inline constexpr const char* kCsvHeader = "family,n,depth,seed,gamma_std,gamma_blk,gain";
std::string rows_to_csv(const std::vector<GainRow>& rows);
/// Throws ParseError.
std::vector<GainRow> rows_from_csv(const std::string& text);

/// Arithmetic mean of the gain per n, ascending n.
std::vector<std::pair<double, double>> mean_gain_by_n(const std::vector<GainRow>& rows);

struct FitResult {
  enum class Model { exponential, quadratic };

  Model model = Model::quadratic;
  /// exponential: a e^{b n} + c; quadratic: a n^2 + b n + c.
  std::array<double, 3> params{};
  double total_squared_residual = 0.0;
  bool converged = true;
  int iterations = 0;

  double operator()(double n) const;
};

inline constexpr int kMaxFitIterations = 500;

/// (exponential, quadratic) least-squares fits. Needs at least 4 points.
std::pair<FitResult, FitResult> fit_models(const std::vector<std::pair<double, double>>& points);

}  // namespace blockpec
