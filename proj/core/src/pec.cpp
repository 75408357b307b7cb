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

#include "blockpec/pec.hpp"

#include <cmath>
#include <numeric>

#include "blockpec/errors.hpp"

namespace blockpec {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::std: return "std";
    case Mode::blk: return "blk";
    case Mode::hybrid: return "hybrid";
  }
  return "?";
}

Mode mode_from_string(const std::string& name) {
  if (name == "std") return Mode::std;
  if (name == "blk") return Mode::blk;
  if (name == "hybrid") return Mode::hybrid;
  throw InvalidArgument("unknown mode '" + name + "'");
}

ZMixture layer_distribution(const GateOp& g, const NoiseSpec& spec) {
  if (spec.is_noiseless()) return ZMixture::identity(g.qubits);
  return invert_z_mixture(make_dephasing(spec, g.qubits));
}

double gamma_std(const Circuit& c) {
  double gamma = 1.0;
  for (std::size_t i = 0; i < c.size(); ++i) gamma *= layer_distribution(c.op(i), c.noise(i)).gamma();
  return gamma;
}

double BlockCoefficients::gamma() const {
  double g = 0.0;
  for (double v : coeffs) g += std::abs(v);
  return g;
}

double BlockCoefficients::sum() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0.0); }

ZMixture BlockCoefficients::to_mixture() const {
  std::vector<int> support(static_cast<std::size_t>(n));
  std::iota(support.begin(), support.end(), 0);
  return ZMixture(std::move(support), coeffs);
}

namespace {

std::uint64_t scatter(std::uint64_t local, const std::vector<int>& qubits) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < qubits.size(); ++j)
    if ((local >> j) & 1U) out |= std::uint64_t{1} << qubits[j];
  return out;
}

std::uint64_t gather(std::uint64_t global, const std::vector<int>& qubits) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < qubits.size(); ++j)
    if ((global >> qubits[j]) & 1U) out |= std::uint64_t{1} << j;
  return out;
}

// Image of a global mask under a local conjugation table.
struct Propagator {
  std::vector<int> qubits;
  std::vector<std::uint64_t> table;
  std::uint64_t support_mask = 0;

  Propagator(const GateOp& g, const PropagationOptions& opts)
      : qubits(g.qubits), table(conjugation_table(g, opts)), support_mask(scatter(~0ULL >> (64 - g.qubits.size()), g.qubits)) {}

  std::uint64_t operator()(std::uint64_t mask) const {
    return (mask & ~support_mask) | scatter(table[gather(mask, qubits)], qubits);
  }
};

void check_block_width(int n) {
  if (n > kMaxBlockQubits)
    throw GuardExceeded("block coefficients are limited to " + std::to_string(kMaxBlockQubits) +
                        " qubits");
}

}  // namespace

BlockCoefficients block_coefficients(const Circuit& c, const PropagationOptions& opts) {
  const int n = c.num_qubits();
  check_block_width(n);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> acc(dim, 0.0), next(dim, 0.0);
  acc[0] = 1.0;
  for (std::size_t l = 0; l < c.size(); ++l) {
    const GateOp& g = c.op(l);
    const Propagator prop(g, opts);
    const ZMixture dist = layer_distribution(g, c.noise(l));

    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t w = 0; w < dim; ++w)
      if (acc[w] != 0.0) next[prop(w)] = acc[w];
    acc.swap(next);

    if (dist.size() == 0 || (dist.coeff(0) == 1.0 && dist.gamma() == 1.0)) continue;
    std::fill(next.begin(), next.end(), 0.0);
    const auto coeffs = dist.coeffs();
    std::vector<std::uint64_t> shifts(coeffs.size());
    for (std::uint64_t v = 0; v < coeffs.size(); ++v) shifts[v] = scatter(v, g.qubits);
    for (std::size_t w = 0; w < dim; ++w) {
      const double a = acc[w];
      if (a == 0.0) continue;
      for (std::size_t v = 0; v < coeffs.size(); ++v) next[w ^ shifts[v]] += coeffs[v] * a;
    }
    acc.swap(next);
  }
  return {n, std::move(acc)};
}

BlockCoefficients naive_block_coefficients(const Circuit& c, const PropagationOptions& opts) {
  const int n = c.num_qubits();
  const std::size_t d = c.size();
  if (static_cast<std::size_t>(n) * d > 16)
    throw GuardExceeded("naive enumeration requires n*d <= 16");
  std::vector<Propagator> props;
  std::vector<ZMixture> dists;
  for (std::size_t l = 0; l < d; ++l) {
    props.emplace_back(c.op(l), opts);
    dists.push_back(layer_distribution(c.op(l), c.noise(l)));
  }
  // Commute a control inserted after op l to the end of the circuit.
  auto to_end = [&](std::uint64_t mask, std::size_t l) {
    for (std::size_t k = l + 1; k < d; ++k) mask = props[k](mask);
    return mask;
  };

  std::vector<double> out(std::size_t{1} << n, 0.0);
  std::vector<std::uint64_t> choice(d, 0);
  while (true) {
    double weight = 1.0;
    std::uint64_t total = 0;
    for (std::size_t l = 0; l < d; ++l) {
      weight *= dists[l].coeff(choice[l]);
      total ^= to_end(scatter(choice[l], c.op(l).qubits), l);
    }
    out[total] += weight;
    std::size_t l = 0;
    for (; l < d; ++l) {
      if (++choice[l] < dists[l].coeffs().size()) break;
      choice[l] = 0;
    }
    if (l == d) break;
  }
  return {n, std::move(out)};
}

double gamma_blk(const Circuit& c, const PropagationOptions& opts) {
  return block_coefficients(c, opts).gamma();
}

ZMixture fold_noisy_controls(const BlockCoefficients& b, const NoiseSpec& spec) {
  const int n = b.n;
  check_block_width(n);
  std::vector<double> delta(b.coeffs.size(), 0.0);
  for (std::uint64_t v = 0; v < b.coeffs.size(); ++v) {
    const double a = b.coeffs[v];
    if (a == 0.0) continue;
    std::vector<int> support;
    for (int q = 0; q < n; ++q)
      if ((v >> q) & 1U) support.push_back(q);
    if (support.empty() || spec.is_noiseless()) {
      delta[v] += a;
      continue;
    }
    const ZMixture beta = invert_z_mixture(make_dephasing(spec, support));
    const auto coeffs = beta.coeffs();
    for (std::uint64_t u = 0; u < coeffs.size(); ++u)
      delta[v ^ scatter(u, support)] += a * coeffs[u];
  }
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return ZMixture(std::move(all), std::move(delta));
}

namespace {

PlanSegment per_gate_segment(const Circuit& c, std::size_t i) {
  return {PlanSegment::Type::per_gate, {i, i + 1}, layer_distribution(c.op(i), c.noise(i))};
}

PlanSegment block_segment(const Circuit& c, OpRange range, const PropagationOptions& opts) {
  return {PlanSegment::Type::block, range, block_coefficients(c.slice(range), opts).to_mixture()};
}

void finish(MitigationPlan& plan) {
  plan.total_gamma = 1.0;
  for (const auto& s : plan.segments) plan.total_gamma *= s.gamma();
}

}  // namespace

MitigationPlan std_plan(const Circuit& c) {
  MitigationPlan plan{c.num_qubits(), Mode::std, {}, 1.0};
  for (std::size_t i = 0; i < c.size(); ++i) plan.segments.push_back(per_gate_segment(c, i));
  finish(plan);
  return plan;
}

MitigationPlan blk_plan(const Circuit& c, const PropagationOptions& opts) {
  MitigationPlan plan{c.num_qubits(), Mode::blk, {}, 1.0};
  if (!c.empty()) plan.segments.push_back(block_segment(c, {0, c.size()}, opts));
  finish(plan);
  return plan;
}

MitigationPlan hybrid_plan(const Circuit& c, const PropagationOptions& opts) {
  MitigationPlan plan{c.num_qubits(), Mode::hybrid, {}, 1.0};
  const CompatReport report = classify_circuit(c, opts);
  std::size_t next = 0;
  for (const OpRange& seg : report.segments) {
    for (; next < seg.begin; ++next) plan.segments.push_back(per_gate_segment(c, next));
    plan.segments.push_back(block_segment(c, seg, opts));
    next = seg.end;
  }
  for (; next < c.size(); ++next) plan.segments.push_back(per_gate_segment(c, next));
  finish(plan);
  return plan;
}

MitigationPlan make_plan(const Circuit& c, Mode mode, const PropagationOptions& opts) {
  switch (mode) {
    case Mode::std: return std_plan(c);
    case Mode::blk: return blk_plan(c, opts);
    case Mode::hybrid: return hybrid_plan(c, opts);
  }
  throw InvalidArgument("unknown mode");
}

std::pair<double, double> analytic_pattern_gammas(Pattern pattern, double p, bool correlated) {
  if (!(p > 0.0 && p < 0.5)) throw InvalidArgument("p must lie in (0, 0.5)");
  const double r = 1.0 - 2.0 * p;
  if (correlated) {
    if (pattern != Pattern::b)
      throw UnsupportedKind("closed forms under correlated noise exist for pattern b only");
    return {std::pow(r, -2), (3.0 - 4.0 * p * p) / (3.0 * r)};
  }
  switch (pattern) {
    case Pattern::a: return {std::pow(r, -3), (1 + 2 * p - 2 * p * p) * std::pow(r, -2)};
    case Pattern::b: return {std::pow(r, -4), (1 + 2 * p - 6 * p * p + 4 * p * p * p) * std::pow(r, -3)};
    case Pattern::c: return {std::pow(r, -4), (1 + 2 * p - 2 * p * p) * std::pow(r, -3)};
  }
  throw InvalidArgument("unknown pattern");
}

}  // namespace blockpec
