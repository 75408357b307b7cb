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

#include "blockpec/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include <Eigen/Dense>

#include "blockpec/errors.hpp"
#include "blockpec/pec.hpp"

namespace blockpec {

std::string to_string(Family family) {
  switch (family) {
    case Family::random_bp: return "random_bp";
    case Family::swap_network: return "swap_network";
    case Family::rbs_pyramid: return "rbs_pyramid";
    case Family::option_payoff: return "option_payoff";
    case Family::unary_loader: return "unary_loader";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::random_bp, Family::swap_network, Family::rbs_pyramid,
                   Family::option_payoff, Family::unary_loader})
    if (to_string(f) == name) return f;
  throw InvalidArgument("unknown family '" + name + "'");
}

void ExperimentConfig::validate() const {
  const int lowest = family == Family::option_payoff ? 1 : 2;
  if (n_min < lowest || n_max < n_min) throw InvalidArgument("invalid n range");
  const int width = family == Family::option_payoff ? n_max + 1 : n_max;
  if (width > kMaxBlockQubits) throw InvalidArgument("n range exceeds the block width limit");
  if (seeds.empty()) throw InvalidArgument("at least one seed is required");
  if (!(depth_factor > 0.0)) throw InvalidArgument("depth_factor must be positive");
  noise.validate();
}

Circuit build_family_circuit(const ExperimentConfig& cfg, int n, std::uint64_t seed) {
  switch (cfg.family) {
    case Family::random_bp: return gen_random_bp(n, seed, cfg.noise);
    case Family::swap_network:
      return gen_swap_network(n, cfg.depth_factor, cfg.interaction, seed, cfg.noise);
    case Family::rbs_pyramid: return gen_rbs_pyramid(n, seed, cfg.noise);
    case Family::option_payoff: return gen_option_payoff(n, seed, cfg.noise);
    case Family::unary_loader: {
      // Positive entries keep every intermediate sine away from zero.
      std::vector<double> x = random_angles(static_cast<std::size_t>(n), seed);
      for (double& v : x) v = 0.1 + v;
      return expand_rbs(gen_unary_loader(x, cfg.noise));
    }
  }
  throw InvalidArgument("unknown family");
}

std::vector<GainRow> run_gain_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<GainRow> rows;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (std::uint64_t seed : cfg.seeds) {
      const Circuit c = build_family_circuit(cfg, n, seed);
      GainRow row;
      row.family = to_string(cfg.family);
      row.n = n;
      row.depth = c.size();
      row.seed = seed;
      row.gamma_std = gamma_std(c);
      row.gamma_blk = hybrid_plan(c, cfg.propagation).total_gamma;
      row.gain = std::pow(row.gamma_std / row.gamma_blk, 2);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string rows_to_csv(const std::vector<GainRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%zu,%llu,%.17g,%.17g,%.17g\n", r.family.c_str(), r.n,
                  r.depth, static_cast<unsigned long long>(r.seed), r.gamma_std, r.gamma_blk, r.gain);
    out << buf;
  }
  return out.str();
}

std::vector<GainRow> rows_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<GainRow> rows;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != kCsvHeader) throw ParseError("expected header '" + std::string(kCsvHeader) + "'", line_no);
      header = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) throw ParseError("expected 7 columns", line_no);
    try {
      GainRow r;
      r.family = cells[0];
      r.n = std::stoi(cells[1]);
      r.depth = std::stoull(cells[2]);
      r.seed = std::stoull(cells[3]);
      r.gamma_std = std::stod(cells[4]);
      r.gamma_blk = std::stod(cells[5]);
      r.gain = std::stod(cells[6]);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw ParseError("malformed number", line_no);
    }
  }
  if (!header) throw ParseError("empty CSV", 0);
  return rows;
}

std::vector<std::pair<double, double>> mean_gain_by_n(const std::vector<GainRow>& rows) {
  std::map<int, std::pair<double, int>> acc;
  for (const auto& r : rows) {
    acc[r.n].first += r.gain;
    acc[r.n].second += 1;
  }
  std::vector<std::pair<double, double>> out;
  for (const auto& [n, s] : acc) out.emplace_back(n, s.first / s.second);
  return out;
}

double FitResult::operator()(double n) const {
  if (model == Model::exponential) return params[0] * std::exp(params[1] * n) + params[2];
  return (params[0] * n + params[1]) * n + params[2];
}

namespace {

double residual(const FitResult& f, const std::vector<std::pair<double, double>>& pts) {
  double s = 0.0;
  for (const auto& [x, y] : pts) s += (f(x) - y) * (f(x) - y);
  return s;
}

FitResult fit_quadratic(const std::vector<std::pair<double, double>>& pts) {
  Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
  Eigen::Vector3d aty = Eigen::Vector3d::Zero();
  for (const auto& [x, y] : pts) {
    const Eigen::Vector3d row(x * x, x, 1.0);
    ata += row * row.transpose();
    aty += row * y;
  }
  const Eigen::Vector3d sol = ata.ldlt().solve(aty);
  FitResult f;
  f.model = FitResult::Model::quadratic;
  f.params = {sol[0], sol[1], sol[2]};
  f.total_squared_residual = residual(f, pts);
  return f;
}

FitResult fit_exponential(const std::vector<std::pair<double, double>>& pts) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& [x, y] : pts) {
    lo = std::min(lo, y);
    hi = std::max(hi, y);
  }
  const double eps = std::max(1e-12, 1e-3 * (hi - lo));
  // Log-linear seed: ln(y - lo + eps) = ln a + b n.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(pts.size());
  for (const auto& [x, y] : pts) {
    const double ly = std::log(y - lo + eps);
    sx += x;
    sy += ly;
    sxx += x * x;
    sxy += x * ly;
  }
  const double denom = m * sxx - sx * sx;
  const double b0 = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
  const double a0 = std::exp((sy - b0 * sx) / m);

  FitResult f;
  f.model = FitResult::Model::exponential;
  f.params = {a0, b0, lo - eps};
  double cost = residual(f, pts);
  double lambda = 1e-3;
  f.converged = false;
  int it = 0;
  for (; it < kMaxFitIterations; ++it) {
    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (const auto& [x, y] : pts) {
      const double e = std::exp(f.params[1] * x);
      const Eigen::Vector3d grad(e, f.params[0] * x * e, 1.0);
      const double r = y - f(x);
      jtj += grad * grad.transpose();
      jtr += grad * r;
    }
    bool improved = false;
    while (lambda < 1e16) {
      Eigen::Matrix3d damped = jtj;
      for (int k = 0; k < 3; ++k) damped(k, k) *= 1.0 + lambda;
      const Eigen::Vector3d step = damped.ldlt().solve(jtr);
      FitResult trial = f;
      for (int k = 0; k < 3; ++k) trial.params[static_cast<std::size_t>(k)] += step[k];
      const double trial_cost = residual(trial, pts);
      if (std::isfinite(trial_cost) && trial_cost <= cost) {
        const double drop = cost - trial_cost;
        f = trial;
        lambda = std::max(lambda / 10.0, 1e-12);
        improved = true;
        if (drop <= 1e-15 * std::max(cost, 1e-300) || step.norm() <= 1e-14 * (1.0 + Eigen::Vector3d(f.params[0], f.params[1], f.params[2]).norm()))
          f.converged = true;
        cost = trial_cost;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved || cost == 0.0) f.converged = true;
    if (f.converged) break;
  }
  f.iterations = it + 1;
  f.total_squared_residual = cost;
  return f;
}

}  // namespace

std::pair<FitResult, FitResult> fit_models(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4) throw InvalidArgument("fitting needs at least 4 points");
  return {fit_exponential(points), fit_quadratic(points)};
}

}  // namespace blockpec
