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
#include <vector>

#include "blockpec/circuit.hpp"
#include "blockpec/pec.hpp"

namespace blockpec {

enum class Interaction { rzz, rbs };

std::string to_string(Interaction interaction);
Interaction interaction_from_string(const std::string& name);

/// n+1 gates drawn uniformly from {X, Z, CNOT, RZ, RZZ, CZ}; qubits are
/// uniform over distinct (unrestricted) tuples, angles uniform in [0, 2pi).
Circuit gen_random_bp(int n, std::uint64_t seed, const NoiseSpec& noise = {});

/// Brick network of round(depth_factor * n) layers. Layer L acts on pairs
/// (i, i+1) with i = L mod 2; each pair gets interaction(theta) followed by
/// a SWAP compiled to three CNOTs. RBS interactions are expanded with
/// expand_rbs.
Circuit gen_swap_network(int n, double depth_factor, Interaction interaction, std::uint64_t seed,
                         const NoiseSpec& noise = {});

/// Pair positions of the n-qubit pyramid in time order: diagonal k, position
/// j acts on (j, j+1) at step 2k + j.
std::vector<std::pair<int, int>> pyramid_schedule(int n);
/// X on qubit 0, then n(n-1)/2 RBS gates in pyramid order, each expanded
/// to CNOT XCZ CNOT.
Circuit gen_rbs_pyramid(int n, const std::vector<double>& angles, const NoiseSpec& noise = {});
Circuit gen_rbs_pyramid(int n, std::uint64_t seed, const NoiseSpec& noise = {});

/// Register qubits 0..n-1 and ancilla n: Y(t0) on the ancilla, then
/// CY(t_{j+1}) from register qubit j onto the ancilla, all expanded.
Circuit gen_option_payoff(int n, const std::vector<double>& angles, const NoiseSpec& noise = {});
Circuit gen_option_payoff(int n, std::uint64_t seed, const NoiseSpec& noise = {});

/// theta_j such that the RBS chain maps e_0 onto x / |x|.
/// Throws DegenerateVector when a required sine vanishes.
std::vector<double> unary_loader_angles(std::vector<double> x);
/// X on qubit 0 then RBS(theta_j) on (j, j+1). RBS gates are kept native.
Circuit gen_unary_loader(const std::vector<double>& x, const NoiseSpec& noise = {});

/// U_(a) = [RZ_1, CNOT_{0,1}], U_(b) = [RZZ_{0,1}, CNOT_{0,1}],
/// U_(c) = [RZZ_{1,2}, CNOT_{0,1}].
Circuit gen_pattern(Pattern pattern, double theta, const NoiseSpec& noise = {});

/// Uniform draws in [0, 2pi) from the generator stream of `seed`.
std::vector<double> random_angles(std::size_t count, std::uint64_t seed);

}  // namespace blockpec
