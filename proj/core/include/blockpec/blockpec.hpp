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

#include "blockpec/circuit.hpp"
#include "blockpec/compat.hpp"
#include "blockpec/errors.hpp"
#include "blockpec/estimator.hpp"
#include "blockpec/experiment.hpp"
#include "blockpec/gate.hpp"
#include "blockpec/generators.hpp"
#include "blockpec/io.hpp"
#include "blockpec/noise.hpp"
#include "blockpec/pauli_z.hpp"
#include "blockpec/pec.hpp"
#include "blockpec/simulator.hpp"
