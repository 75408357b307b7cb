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

#include "blockpec/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include "blockpec/errors.hpp"
#include "blockpec/estimator.hpp"

namespace blockpec {

std::string to_string(Interaction interaction) {
  return interaction == Interaction::rzz ? "rzz" : "rbs";
}

Interaction interaction_from_string(const std::string& name) {
  if (name == "rzz") return Interaction::rzz;
  if (name == "rbs") return Interaction::rbs;
  throw InvalidArgument("unknown interaction '" + name + "'");
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  int below(int k) { return std::min(k - 1, static_cast<int>(uniform() * k)); }
  double angle() { return uniform() * kTwoPi; }

 private:
  std::mt19937_64 engine_;
};

void add_rbs(Circuit& c, int j, int k, double theta) {
  c.add(GateKind::CNOT, {j, k});
  c.add(GateKind::XCZ, {j, k}, theta);
  c.add(GateKind::CNOT, {j, k});
}

void add_y(Circuit& c, int q, double theta) {
  c.add(GateKind::RZ, {q}, -std::numbers::pi / 2);
  c.add(GateKind::H, {q});
  c.add(GateKind::RZ, {q}, theta);
  c.add(GateKind::H, {q});
  c.add(GateKind::S, {q});
}

}  // namespace

std::vector<double> random_angles(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out(count);
  for (auto& a : out) a = rng.angle();
  return out;
}

Circuit gen_random_bp(int n, std::uint64_t seed, const NoiseSpec& noise) {
  if (n < 2) throw InvalidArgument("random circuits need n >= 2");
  static constexpr GateKind kinds[] = {GateKind::X,  GateKind::Z,   GateKind::CNOT,
                                       GateKind::RZ, GateKind::RZZ, GateKind::CZ};
  Rng rng(seed);
  Circuit c(n, noise);
  for (int i = 0; i <= n; ++i) {
    const GateKind kind = kinds[rng.below(6)];
    std::vector<int> qubits;
    if (arity(kind) == 1) {
      qubits = {rng.below(n)};
    } else {
      const int a = rng.below(n);
      int b = rng.below(n - 1);
      if (b >= a) ++b;
      qubits = {a, b};
    }
    const double angle = is_parameterized(kind) ? rng.angle() : 0.0;
    c.add(kind, qubits, angle);
  }
  return c;
}

Circuit gen_swap_network(int n, double depth_factor, Interaction interaction, std::uint64_t seed,
                         const NoiseSpec& noise) {
  if (n < 2) throw InvalidArgument("swap networks need n >= 2");
  if (!(depth_factor > 0.0)) throw InvalidArgument("depth_factor must be positive");
  const auto layers = static_cast<int>(std::lround(depth_factor * n));
  Rng rng(seed);
  Circuit c(n, noise);
  for (int layer = 0; layer < layers; ++layer) {
    for (int i = layer % 2; i + 1 < n; i += 2) {
      const double theta = rng.angle();
      if (interaction == Interaction::rzz)
        c.add(GateKind::RZZ, {i, i + 1}, theta);
      else
        add_rbs(c, i, i + 1, theta);
      c.add(GateKind::CNOT, {i, i + 1});
      c.add(GateKind::CNOT, {i + 1, i});
      c.add(GateKind::CNOT, {i, i + 1});
    }
  }
  return c;
}

std::vector<std::pair<int, int>> pyramid_schedule(int n) {
  std::vector<std::tuple<int, int>> slots;  // (time, position)
  for (int k = 0; k <= n - 2; ++k)
    for (int j = 0; j <= n - 2 - k; ++j) slots.emplace_back(2 * k + j, j);
  std::sort(slots.begin(), slots.end());
  std::vector<std::pair<int, int>> out;
  for (const auto& [t, j] : slots) out.emplace_back(j, j + 1);
  return out;
}

Circuit gen_rbs_pyramid(int n, const std::vector<double>& angles, const NoiseSpec& noise) {
  if (n < 2) throw InvalidArgument("pyramids need n >= 2");
  const auto schedule = pyramid_schedule(n);
  if (angles.size() != schedule.size())
    throw InvalidArgument("pyramid on " + std::to_string(n) + " qubits needs " +
                          std::to_string(schedule.size()) + " angles");
  Circuit c(n, noise);
  c.add(GateKind::X, {0});
  for (std::size_t i = 0; i < schedule.size(); ++i)
    add_rbs(c, schedule[i].first, schedule[i].second, angles[i]);
  return c;
}

Circuit gen_rbs_pyramid(int n, std::uint64_t seed, const NoiseSpec& noise) {
  if (n < 2) throw InvalidArgument("pyramids need n >= 2");
  return gen_rbs_pyramid(n, random_angles(static_cast<std::size_t>(n * (n - 1) / 2), seed), noise);
}

Circuit gen_option_payoff(int n, const std::vector<double>& angles, const NoiseSpec& noise) {
  if (n < 1) throw InvalidArgument("payoff circuits need n >= 1 register qubits");
  if (angles.size() != static_cast<std::size_t>(n + 1))
    throw InvalidArgument("payoff circuit needs n + 1 angles");
  const int anc = n;
  Circuit c(n + 1, noise);
  add_y(c, anc, angles[0]);
  for (int j = 0; j < n; ++j) {
    const double theta = angles[static_cast<std::size_t>(j + 1)];
    c.add(GateKind::CNOT, {j, anc});
    add_y(c, anc, -theta / 2);
    c.add(GateKind::CNOT, {j, anc});
    add_y(c, anc, theta / 2);
  }
  return c;
}

Circuit gen_option_payoff(int n, std::uint64_t seed, const NoiseSpec& noise) {
  if (n < 1) throw InvalidArgument("payoff circuits need n >= 1 register qubits");
  return gen_option_payoff(n, random_angles(static_cast<std::size_t>(n + 1), seed), noise);
}

std::vector<double> unary_loader_angles(std::vector<double> x) {
  if (x.size() < 2) throw InvalidArgument("loader needs dimension >= 2");
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  if (!(norm > 0.0)) throw DegenerateVector("zero vector");
  for (double& v : x) v /= norm;

  std::vector<double> theta;
  double remaining = 1.0;  // product of sines so far
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    if (std::abs(remaining) < 1e-12)
      throw DegenerateVector("sine product vanishes before coordinate " + std::to_string(j));
    const double ratio = std::clamp(x[j] / remaining, -1.0, 1.0);
    double t = std::acos(ratio);
    if (j + 2 == x.size() && x[j + 1] < 0.0) t = -t;
    theta.push_back(t);
    remaining *= std::sin(t);
  }
  return theta;
}

Circuit gen_unary_loader(const std::vector<double>& x, const NoiseSpec& noise) {
  const auto theta = unary_loader_angles(x);
  Circuit c(static_cast<int>(x.size()), noise);
  c.add(GateKind::X, {0});
  // RBS(t) on (j, j+1) maps |10> to cos t |10> + sin t |01>.
  for (std::size_t j = 0; j < theta.size(); ++j)
    c.add(GateKind::RBS, {static_cast<int>(j), static_cast<int>(j + 1)}, theta[j]);
  return c;
}

Circuit gen_pattern(Pattern pattern, double theta, const NoiseSpec& noise) {
  switch (pattern) {
    case Pattern::a: {
      Circuit c(2, noise);
      c.add(GateKind::RZ, {1}, theta);
      c.add(GateKind::CNOT, {0, 1});
      return c;
    }
    case Pattern::b: {
      Circuit c(2, noise);
      c.add(GateKind::RZZ, {0, 1}, theta);
      c.add(GateKind::CNOT, {0, 1});
      return c;
    }
    case Pattern::c: {
      Circuit c(3, noise);
      c.add(GateKind::RZZ, {1, 2}, theta);
      c.add(GateKind::CNOT, {0, 1});
      return c;
    }
  }
  throw InvalidArgument("unknown pattern");
}

}  // namespace blockpec
