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

#include "blockpec/io.hpp"

#include <cmath>

#include <json.hpp>

#include "blockpec/errors.hpp"

namespace blockpec {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
}

json noise_json(const NoiseSpec& spec) {
  json j = {{"kind", to_string(spec.kind)}, {"p", spec.p}};
  j["q"] = spec.kind == NoiseKind::impure ? json(spec.q) : json(nullptr);
  return j;
}

NoiseSpec noise_from(const json& j) {
  if (!j.is_object()) throw ParseError("noise spec must be an object", 0);
  try {
    NoiseSpec spec;
    spec.kind = noise_kind_from_string(j.at("kind").get<std::string>());
    spec.p = j.value("p", 0.0);
    if (j.contains("q") && !j.at("q").is_null()) spec.q = j.at("q").get<double>();
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid noise spec: ") + e.what(), 0);
  }
}

}  // namespace

NoiseSpec noise_from_json(const std::string& text) { return noise_from(parse(text)); }

std::string noise_to_json(const NoiseSpec& spec) { return noise_json(spec).dump(); }

std::string plan_to_json(const MitigationPlan& plan, bool include_coeffs) {
  json segs = json::array();
  for (const auto& s : plan.segments) {
    json j = {{"type", s.type == PlanSegment::Type::block ? "block" : "per_gate"},
              {"op_range", {s.range.begin, s.range.end}},
              {"gamma", s.gamma()}};
    if (include_coeffs) {
      json coeffs = json::array();
      const auto c = s.distribution.coeffs();
      for (std::uint64_t v = 0; v < c.size(); ++v)
        if (c[v] != 0.0) coeffs.push_back({s.distribution.to_global(v), c[v]});
      j["coeffs"] = std::move(coeffs);
    }
    segs.push_back(std::move(j));
  }
  json out = {{"n", plan.n},
              {"mode", to_string(plan.mode)},
              {"total_gamma", plan.total_gamma},
              {"segments", std::move(segs)}};
  return out.dump(2);
}

std::string report_to_json(const EstimatorReport& r, double ideal) {
  json out = {{"mean", r.mean},
              {"sample_variance", r.sample_variance},
              {"n_samples", r.n_samples},
              {"gamma_used", r.gamma_used},
              {"mode", to_string(r.mode)},
              {"seed", r.seed},
              {"shots", r.shots},
              {"prng", r.prng},
              {"ideal", ideal},
              {"abs_error", std::abs(r.mean - ideal)}};
  return out.dump(2);
}

ExperimentConfig config_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) throw ParseError("config must be an object", 0);
  ExperimentConfig cfg;
  try {
    cfg.family = family_from_string(j.at("family").get<std::string>());
    const auto& range = j.at("n_range");
    if (range.is_array() && range.size() == 2) {
      cfg.n_min = range[0].get<int>();
      cfg.n_max = range[1].get<int>();
    } else {
      cfg.n_min = cfg.n_max = range.get<int>();
    }
    cfg.depth_factor = j.value("depth_factor", 1.0);
    cfg.interaction = interaction_from_string(j.value("interaction", std::string("rzz")));
    if (j.contains("noise")) cfg.noise = noise_from(j.at("noise"));
    if (j.contains("seeds")) cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    cfg.output_path = j.value("output_path", std::string());
    cfg.propagation.xcz_commutes = j.value("xcz_commutes", false);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid config: ") + e.what(), 0);
  }
  cfg.validate();
  return cfg;
}

std::string fit_to_json(const std::pair<FitResult, FitResult>& fits) {
  auto one = [](const FitResult& f) {
    return json{{"model", f.model == FitResult::Model::exponential ? "exponential" : "quadratic"},
                {"params", {f.params[0], f.params[1], f.params[2]}},
                {"total_squared_residual", f.total_squared_residual},
                {"converged", f.converged},
                {"iterations", f.iterations}};
  };
  return json{{"exponential", one(fits.first)}, {"quadratic", one(fits.second)}}.dump(2);
}

std::string compat_to_json(const Circuit& c, const CompatReport& report) {
  json gates = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& f = report.flags[i];
    gates.push_back({{"index", i},
                     {"op", c.op(i).str()},
                     {"bias_preserving", f.bias_preserving},
                     {"s1_bias_preserving", f.s1_bias_preserving},
                     {"pauli_z_compatible", f.pauli_z_compatible}});
  }
  json segs = json::array();
  for (const auto& s : report.segments) segs.push_back({s.begin, s.end});
  return json{{"n", c.num_qubits()},
              {"fully_compatible", report.fully_compatible()},
              {"gates", std::move(gates)},
              {"segments", std::move(segs)}}
      .dump(2);
}

}  // namespace blockpec
