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

#include <cstddef>
#include <vector>

#include "qlinsys/sim.hpp"

namespace qlinsys {

/// Rotation geometry of amplitude amplification over N items with M marked.
/// sin(theta) = sqrt(M / N); after k iterations the marked-subspace
/// probability is sin^2((2k + 1) theta).
struct GroverGeometry {
    std::size_t n_items = 0;
    std::size_t n_marked = 0;
    double theta = 0;
};

/// Throws InvalidCounts unless N is a power of two and 0 < M <= N.
GroverGeometry geometry(std::size_t n_items, std::size_t n_marked);

/// round(pi / (4 theta) - 1/2), never negative.
std::size_t optimal_iterations(const GroverGeometry &g);

double success_probability(const GroverGeometry &g, std::size_t iterations);

/// H on every qubit, then `iterations` rounds of oracle (phase flip on
/// `marked`) and diffusion H^n (phase flip on |0>) H^n. The diffusion is
/// realized up to a global sign of -1.
///
/// Throws InvalidMarkedSet for n outside [1, 10], an empty marked set, or
/// repeated / out-of-range indices.
Circuit build_grover_circuit(std::size_t n_qubits, const std::vector<std::size_t> &marked, std::size_t iterations);

/// Total probability on `marked`.
double marked_probability(const QuantumState &state, const std::vector<std::size_t> &marked);

}  // namespace qlinsys
