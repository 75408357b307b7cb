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

#include "blockpec/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <random>
#include <sstream>

#include "blockpec/errors.hpp"

namespace blockpec {

Observable Observable::z(const PauliZString& s) {
  Observable o;
  o.kind_ = Kind::pauli_z_string;
  o.n_ = s.n;
  o.z_ = s;
  return o;
}

Observable Observable::projector(int n, std::vector<std::pair<int, int>> qubit_bits) {
  for (const auto& [q, b] : qubit_bits) {
    if (q < 0 || q >= n) throw InvalidArgument("projector qubit out of range");
    if (b != 0 && b != 1) throw InvalidArgument("projector bit must be 0 or 1");
  }
  Observable o;
  o.kind_ = Kind::diagonal_projector;
  o.n_ = n;
  o.bits_ = std::move(qubit_bits);
  return o;
}

Observable Observable::dense(const Eigen::MatrixXcd& m) {
  const auto d = m.rows();
  if (d != m.cols() || d < 2 || (d & (d - 1)) != 0)
    throw InvalidArgument("dense observable must be a 2^n square matrix");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw InvalidArgument("dense observable is not Hermitian");
  Observable o;
  o.kind_ = Kind::dense_hermitian;
  o.n_ = 0;
  while ((Eigen::Index{1} << o.n_) < d) ++o.n_;
  const double norm = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly)
                          .eigenvalues()
                          .cwiseAbs()
                          .maxCoeff();
  o.dense_ = norm > 1.0 ? Eigen::MatrixXcd(m / norm) : m;
  return o;
}

std::pair<double, double> Observable::outcome_range() const {
  if (kind_ == Kind::diagonal_projector) return {0.0, 1.0};
  return {-1.0, 1.0};
}

double Observable::diagonal(std::uint64_t basis) const {
  if (kind_ == Kind::pauli_z_string) return (std::popcount(basis & basis_mask(z_)) & 1) ? -1.0 : 1.0;
  for (const auto& [q, b] : bits_)
    if (((basis & basis_bit(q, n_)) != 0) != (b == 1)) return 0.0;
  return 1.0;
}

double Observable::expectation(const StateVector& psi) const {
  if (psi.num_qubits() != n_) throw InvalidArgument("observable width mismatch");
  const auto& a = psi.amplitudes();
  if (kind_ == Kind::dense_hermitian) {
    const Eigen::Map<const Eigen::VectorXcd> v(a.data(), static_cast<Eigen::Index>(a.size()));
    return v.dot(dense_ * v).real();
  }
  double e = 0.0;
  for (std::uint64_t i = 0; i < a.size(); ++i) e += std::norm(a[i]) * diagonal(i);
  return e;
}

double Observable::expectation(const DensityMatrix& rho) const {
  if (rho.num_qubits() != n_) throw InvalidArgument("observable width mismatch");
  const std::uint64_t d = rho.dim();
  double e = 0.0;
  if (kind_ == Kind::dense_hermitian) {
    for (std::uint64_t r = 0; r < d; ++r)
      for (std::uint64_t c = 0; c < d; ++c)
        e += (dense_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * rho(c, r)).real();
    return e;
  }
  for (std::uint64_t i = 0; i < d; ++i) e += rho(i, i).real() * diagonal(i);
  return e;
}

std::string Observable::str() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::pauli_z_string: out << "Z:" << z_.str(); break;
    case Kind::diagonal_projector:
      out << "P:";
      for (std::size_t i = 0; i < bits_.size(); ++i)
        out << (i ? "," : "") << bits_[i].first << '=' << bits_[i].second;
      break;
    case Kind::dense_hermitian: out << "dense:" << n_; break;
  }
  return out.str();
}

double ideal_expectation(const Circuit& c, const Observable& obs) {
  StateVector psi(c.num_qubits());
  for (const auto& g : c.ops()) psi.apply(g);
  return obs.expectation(psi);
}

double noisy_expectation(const Circuit& c, const Observable& obs) {
  DensityMatrix rho(c.num_qubits());
  for (std::size_t i = 0; i < c.size(); ++i) {
    rho.apply(c.op(i));
    rho.apply_noise(c.noise(i), c.op(i).qubits);
  }
  return obs.expectation(rho);
}

namespace {

void run_noisy(DensityMatrix& rho, const Circuit& c, OpRange range) {
  for (std::size_t i = range.begin; i < range.end; ++i) {
    rho.apply(c.op(i));
    rho.apply_noise(c.noise(i), c.op(i).qubits);
  }
}

std::uint64_t nonzero_terms(const ZMixture& m) {
  return static_cast<std::uint64_t>(
      std::count_if(m.coeffs().begin(), m.coeffs().end(), [](double v) { return v != 0.0; }));
}

void check_enumeration(const Circuit& c, const MitigationPlan& plan) {
  std::uint64_t limit = kHybridEnumerationLimit;
  std::uint64_t count = 1;
  if (plan.mode == Mode::std) {
    limit = kStdEnumerationLimit;
    for (const auto& s : plan.segments) {
      count *= std::uint64_t{1} << s.distribution.size();
      if (count > limit) break;
    }
  } else if (plan.mode == Mode::blk) {
    limit = kBlkEnumerationLimit;
    count = std::uint64_t{1} << std::min(c.num_qubits(), 62);
  } else {
    for (const auto& s : plan.segments) {
      count *= nonzero_terms(s.distribution);
      if (count > limit) break;
    }
  }
  if (count > limit)
    throw GuardExceeded("exact " + to_string(plan.mode) + " enumeration exceeds " +
                        std::to_string(limit) + " terms");
}

void check_plan(const Circuit& c, const MitigationPlan& plan) {
  std::size_t next = 0;
  for (const auto& s : plan.segments) {
    if (s.range.begin != next || s.range.end < s.range.begin)
      throw InvalidArgument("plan segments do not tile the circuit");
    next = s.range.end;
  }
  if (next != c.size() || plan.n != c.num_qubits())
    throw InvalidArgument("plan does not match the circuit");
}

}  // namespace

double exact_mitigated_expectation(const Circuit& c, const Observable& obs, Mode mode,
                                   const PropagationOptions& opts) {
  return exact_mitigated_expectation(c, obs, make_plan(c, mode, opts));
}

double exact_mitigated_expectation(const Circuit& c, const Observable& obs,
                                   const MitigationPlan& plan) {
  check_plan(c, plan);
  check_enumeration(c, plan);
  const int n = c.num_qubits();

  std::function<double(const DensityMatrix&, std::size_t)> visit =
      [&](const DensityMatrix& state, std::size_t seg) -> double {
    if (seg == plan.segments.size()) return obs.expectation(state);
    const PlanSegment& s = plan.segments[seg];
    DensityMatrix after = state;
    run_noisy(after, c, s.range);
    const auto coeffs = s.distribution.coeffs();
    double total = 0.0;
    for (std::uint64_t v = 0; v < coeffs.size(); ++v) {
      if (coeffs[v] == 0.0) continue;
      if (v == 0) {
        total += coeffs[v] * visit(after, seg + 1);
        continue;
      }
      DensityMatrix branch = after;
      branch.apply_z(s.distribution.string_of(v, n));
      total += coeffs[v] * visit(branch, seg + 1);
    }
    return total;
  };
  return visit(DensityMatrix(n), 0);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Picks an index with probability |c_i| / sum |c|.
struct AliasFreeSampler {
  std::vector<double> cumulative;
  std::vector<std::uint64_t> index;
  std::vector<double> sign;

  explicit AliasFreeSampler(std::span<const double> coeffs) {
    double run = 0.0;
    for (std::uint64_t v = 0; v < coeffs.size(); ++v) {
      if (coeffs[v] == 0.0) continue;
      run += std::abs(coeffs[v]);
      cumulative.push_back(run);
      index.push_back(v);
      sign.push_back(coeffs[v] < 0.0 ? -1.0 : 1.0);
    }
    for (double& x : cumulative) x /= run;
    cumulative.back() = 1.0;
  }

  std::size_t draw(std::mt19937_64& rng) const {
    const double u = uniform01(rng);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), index.size() - 1);
  }
};

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

double shot_average(double expectation, std::pair<double, double> range, std::uint64_t shots,
                    std::mt19937_64& rng) {
  const auto [lo, hi] = range;
  const double prob = std::clamp((expectation - lo) / (hi - lo), 0.0, 1.0);
  std::uint64_t ones = 0;
  for (std::uint64_t k = 0; k < shots; ++k) ones += uniform01(rng) < prob ? 1 : 0;
  return lo + (hi - lo) * static_cast<double>(ones) / static_cast<double>(shots);
}

}  // namespace

EstimatorReport pec_estimate(const Circuit& c, const Observable& obs, const EstimateOptions& opts) {
  return pec_estimate(c, obs, make_plan(c, opts.mode, opts.propagation), opts);
}

EstimatorReport pec_estimate(const Circuit& c, const Observable& obs, const MitigationPlan& plan,
                             const EstimateOptions& opts) {
  if (opts.n_samples == 0) throw InvalidSamples("n_samples must be at least 1");
  check_plan(c, plan);
  const int n = c.num_qubits();
  if (n > kMaxStatevectorQubits)
    throw GuardExceeded("estimation is limited to " + std::to_string(kMaxStatevectorQubits) +
                        " qubits");
  const bool density = n <= kMaxDensityQubits;

  std::vector<AliasFreeSampler> samplers;
  for (const auto& s : plan.segments) samplers.emplace_back(s.distribution.coeffs());
  // Noise sampling for the trajectory path.
  std::vector<std::optional<AliasFreeSampler>> noise;
  std::vector<ZMixture> noise_channels;
  if (!density) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c.noise(i).is_noiseless()) {
        noise_channels.emplace_back();
        noise.emplace_back();
        continue;
      }
      noise_channels.push_back(make_dephasing(c.noise(i), c.op(i).qubits));
      noise.emplace_back(AliasFreeSampler(noise_channels.back().coeffs()));
    }
  }

  std::vector<double> values(opts.n_samples);
  for (std::uint64_t k = 0; k < opts.n_samples; ++k) {
    std::mt19937_64 rng(sample_seed(opts.seed, k));
    double sign = 1.0;
    std::vector<std::uint64_t> controls(plan.segments.size());
    for (std::size_t s = 0; s < plan.segments.size(); ++s) {
      const std::size_t pick = samplers[s].draw(rng);
      controls[s] = samplers[s].index[pick];
      sign *= samplers[s].sign[pick];
    }
    double outcome = 0.0;
    if (density) {
      DensityMatrix rho(n);
      for (std::size_t s = 0; s < plan.segments.size(); ++s) {
        run_noisy(rho, c, plan.segments[s].range);
        if (controls[s] != 0) rho.apply_z(plan.segments[s].distribution.string_of(controls[s], n));
      }
      outcome = obs.expectation(rho);
    } else {
      StateVector psi(n);
      for (std::size_t s = 0; s < plan.segments.size(); ++s) {
        for (std::size_t i = plan.segments[s].range.begin; i < plan.segments[s].range.end; ++i) {
          psi.apply(c.op(i));
          if (!noise[i]) continue;
          const std::uint64_t e = noise[i]->index[noise[i]->draw(rng)];
          if (e != 0) psi.apply_z(noise_channels[i].string_of(e, n));
        }
        if (controls[s] != 0) psi.apply_z(plan.segments[s].distribution.string_of(controls[s], n));
      }
      outcome = obs.expectation(psi);
    }
    if (opts.shots > 0) outcome = shot_average(outcome, obs.outcome_range(), opts.shots, rng);
    values[k] = plan.total_gamma * sign * outcome;
  }

  EstimatorReport report;
  report.n_samples = opts.n_samples;
  report.gamma_used = plan.total_gamma;
  report.mode = plan.mode;
  report.seed = opts.seed;
  report.shots = opts.shots;
  report.mean = pairwise_sum(values.data(), values.size()) / static_cast<double>(values.size());
  if (values.size() > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - report.mean) * (values[i] - report.mean);
    report.sample_variance = pairwise_sum(sq.data(), sq.size()) / static_cast<double>(values.size() - 1);
  }
  return report;
}

std::uint64_t required_samples(double gamma, double delta, double epsilon) {
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) throw InvalidArgument("gamma must be >= 1");
  if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
  if (!(epsilon > 0.0 && epsilon <= 2.0)) throw InvalidArgument("epsilon must lie in (0, 2]");
  const double bound = gamma * gamma / (2.0 * delta * delta) * std::log(2.0 / epsilon);
  return static_cast<std::uint64_t>(std::ceil(bound));
}

}  // namespace blockpec
