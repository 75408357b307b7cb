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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "blockpec/blockpec.hpp"

namespace {

using namespace blockpec;

enum ExitCode { kOk = 0, kOther = 1, kGuard = 2, kSingular = 3, kParse = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON, or a path to a JSON file.
NoiseSpec load_noise(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return noise_from_json(arg);
  return noise_from_json(read_file(arg));
}

Circuit load_circuit(const std::string& path, const NoiseSpec& noise) {
  return expand_composites(parse_circuit(read_file(path), noise));
}

// "z:0,2" or "proj:3=1,0=0".
Observable parse_observable(const std::string& spec, int n) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("observable must be z:<qubits> or proj:<q=b,...>", 0);
  const std::string kind = spec.substr(0, colon);
  std::stringstream items(spec.substr(colon + 1));
  std::string item;
  try {
    if (kind == "z") {
      std::vector<int> qubits;
      while (std::getline(items, item, ',')) qubits.push_back(std::stoi(item));
      for (int q : qubits)
        if (q < 0 || q >= n) throw InvalidArgument("observable qubit out of range");
      return Observable::z(PauliZString::on(n, qubits));
    }
    if (kind == "proj") {
      std::vector<std::pair<int, int>> bits;
      while (std::getline(items, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("projector terms are q=b", 0);
        bits.emplace_back(std::stoi(item.substr(0, eq)), std::stoi(item.substr(eq + 1)));
      }
      return Observable::projector(n, bits);
    }
  } catch (const std::logic_error&) {
    throw ParseError("malformed observable '" + spec + "'", 0);
  }
  throw ParseError("unknown observable kind '" + kind + "'", 0);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standard and block probabilistic error cancellation under dephasing noise"};
  app.require_subcommand(1);

  std::string noise_arg = R"({"kind":"uncorrelated","p":0.001})";
  std::string mode_arg = "hybrid";
  bool xcz_commutes = false;
  std::string circuit_path;

  auto* gamma_cmd = app.add_subcommand("gamma", "Sampling cost of a circuit");
  std::string plan_path;
  gamma_cmd->add_option("circuit", circuit_path, "Circuit file")->required();
  gamma_cmd->add_option("--mode", mode_arg, "std, blk or hybrid")->check(CLI::IsMember({"std", "blk", "hybrid"}));
  gamma_cmd->add_option("--noise", noise_arg, "Noise spec JSON (inline or file)");
  gamma_cmd->add_option("--plan", plan_path, "Write the mitigation plan JSON here");
  gamma_cmd->add_flag("--xcz-commutes", xcz_commutes, "Treat XCZ as commuting with Z-strings");

  auto* est_cmd = app.add_subcommand("estimate", "Monte Carlo PEC estimate");
  std::uint64_t samples = 0, seed = 0, shots = 0;
  std::string observable_arg = "z:0";
  est_cmd->add_option("circuit", circuit_path, "Circuit file")->required();
  est_cmd->add_option("--samples", samples, "Number of samples")->required();
  est_cmd->add_option("--seed", seed, "64-bit seed")->required();
  est_cmd->add_option("--shots", shots, "Single-shot outcomes per sample (0: exact)");
  est_cmd->add_option("--mode", mode_arg, "std, blk or hybrid")->check(CLI::IsMember({"std", "blk", "hybrid"}));
  est_cmd->add_option("--noise", noise_arg, "Noise spec JSON (inline or file)");
  est_cmd->add_option("--observable", observable_arg, "z:<q,..> or proj:<q=b,..>");
  est_cmd->add_flag("--xcz-commutes", xcz_commutes, "Treat XCZ as commuting with Z-strings");

  auto* exp_cmd = app.add_subcommand("experiment", "Gain experiment, CSV output");
  std::string config_path, output_override;
  exp_cmd->add_option("--config", config_path, "Experiment config JSON file")->required();
  exp_cmd->add_option("-o,--output", output_override, "CSV path (overrides output_path)");

  auto* fit_cmd = app.add_subcommand("fit", "Fit exponential and quadratic models to mean gains");
  std::string csv_path;
  fit_cmd->add_option("csv", csv_path, "CSV from the experiment command")->required();

  auto* compat_cmd = app.add_subcommand("check-compat", "Per-gate compatibility report");
  compat_cmd->add_option("circuit", circuit_path, "Circuit file")->required();
  compat_cmd->add_flag("--xcz-commutes", xcz_commutes, "Treat XCZ as commuting with Z-strings");

  CLI11_PARSE(app, argc, argv);

  try {
    PropagationOptions prop;
    prop.xcz_commutes = xcz_commutes;

    if (*gamma_cmd) {
      const Circuit c = load_circuit(circuit_path, load_noise(noise_arg));
      const MitigationPlan plan = make_plan(c, mode_from_string(mode_arg), prop);
      if (!plan_path.empty()) write_output(plan_path, plan_to_json(plan) + "\n");
      std::printf("{\"mode\": \"%s\", \"gamma\": %.17g, \"gamma_std\": %.17g}\n", mode_arg.c_str(),
                  plan.total_gamma, gamma_std(c));
    } else if (*est_cmd) {
      const Circuit c = load_circuit(circuit_path, load_noise(noise_arg));
      const Observable obs = parse_observable(observable_arg, c.num_qubits());
      EstimateOptions opts;
      opts.mode = mode_from_string(mode_arg);
      opts.n_samples = samples;
      opts.seed = seed;
      opts.shots = shots;
      opts.propagation = prop;
      const EstimatorReport report = pec_estimate(c, obs, opts);
      std::cout << report_to_json(report, ideal_expectation(c, obs)) << '\n';
    } else if (*exp_cmd) {
      const ExperimentConfig cfg = config_from_json(read_file(config_path));
      const std::string csv = rows_to_csv(run_gain_experiment(cfg));
      write_output(output_override.empty() ? cfg.output_path : output_override, csv);
    } else if (*fit_cmd) {
      const auto rows = rows_from_csv(read_file(csv_path));
      std::cout << fit_to_json(fit_models(mean_gain_by_n(rows))) << '\n';
    } else if (*compat_cmd) {
      const Circuit c = parse_circuit(read_file(circuit_path));
      std::cout << compat_to_json(c, classify_circuit(c, prop)) << '\n';
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGuard;
  } catch (const SingularChannel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOk;
}
