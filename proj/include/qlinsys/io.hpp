// Copyright 2026 The qlinsys Authors
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

#include "json.hpp"
#include "qlinsys/family.hpp"
#include "qlinsys/sim.hpp"
#include "qlinsys/synth.hpp"
#include "qlinsys/tomo.hpp"

namespace qlinsys {

/// Shortest round-trip decimal ("0.5", "-0.5", "1").
std::string format_number(double v);

/// OpenQASM 2.0 text ending in `measure q -> c;`. Throws UnsupportedGate for
/// PhaseFlipDiag.
std::string to_qasm(const Circuit &circuit);

nlohmann::json to_json(const Circuit &circuit);
nlohmann::json to_json(const LinearSystemSpec &spec);
nlohmann::json to_json(const std::string &label, const SynthesisResult &result);
/// {"label", "shots", "seed", "counts", "frequencies"}
nlohmann::json to_json(const std::string &label, const ShotTable &table);
/// {"dim", "re", "im"}
nlohmann::json to_json(const DensityMatrix &rho);

/// "row,col,re,im" header then one line per entry.
std::string density_csv(const DensityMatrix &rho);

}  // namespace qlinsys
