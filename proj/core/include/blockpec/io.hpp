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

#include <string>
#include <utility>

#include "blockpec/compat.hpp"
#include "blockpec/estimator.hpp"
#include "blockpec/experiment.hpp"
#include "blockpec/noise.hpp"
#include "blockpec/pec.hpp"

namespace blockpec {

/// {"kind":"uncorrelated|correlated|impure|none","p":0.001,"q":null}
/// Throws ParseError on malformed input, InvalidArgument on bad values.
NoiseSpec noise_from_json(const std::string& text);
std::string noise_to_json(const NoiseSpec& spec);

/// {"n":..,"mode":..,"total_gamma":..,"segments":[{"type":"block|per_gate",
///  "op_range":[begin,end],"gamma":..,"coeffs":[[mask,value],..]}]}
std::string plan_to_json(const MitigationPlan& plan, bool include_coeffs = true);

std::string report_to_json(const EstimatorReport& report, double ideal);

/// Keys: family, n_range [min,max], depth_factor, interaction, noise,
/// seeds, output_path, xcz_commutes.
ExperimentConfig config_from_json(const std::string& text);

std::string fit_to_json(const std::pair<FitResult, FitResult>& fits);

std::string compat_to_json(const Circuit& c, const CompatReport& report);

}  // namespace blockpec
