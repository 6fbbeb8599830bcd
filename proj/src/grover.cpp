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

#include "qlinsys/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qlinsys/error.hpp"

namespace qlinsys {

GroverGeometry geometry(std::size_t n_items, std::size_t n_marked) {
    if (n_items == 0 || (n_items & (n_items - 1)) != 0) {
        throw Error(ErrorCode::InvalidCounts, "N must be a power of two");
    }
    if (n_marked == 0 || n_marked > n_items) {
        throw Error(ErrorCode::InvalidCounts, "need 0 < M <= N");
    }
    const double ratio = static_cast<double>(n_marked) / static_cast<double>(n_items);
    return {n_items, n_marked, std::asin(std::sqrt(ratio))};
}

std::size_t optimal_iterations(const GroverGeometry &g) {
    const double k = std::round(std::numbers::pi / (4.0 * g.theta) - 0.5);
    return k > 0 ? static_cast<std::size_t>(k) : 0;
}

double success_probability(const GroverGeometry &g, std::size_t iterations) {
    const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * g.theta);
    return s * s;
}

Circuit build_grover_circuit(std::size_t n_qubits, const std::vector<std::size_t> &marked, std::size_t iterations) {
    if (n_qubits < 1 || n_qubits > 10) {
        throw Error(ErrorCode::InvalidMarkedSet, "register size must be 1..10 qubits");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (marked.empty()) {
        throw Error(ErrorCode::InvalidMarkedSet, "marked set is empty");
    }
    auto sorted = marked;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= dim) {
        throw Error(ErrorCode::InvalidMarkedSet, "marked indices must be distinct and below 2^n");
    }

    Circuit c(n_qubits);
    auto hadamard_layer = [&] {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            c.append(Gate::h(q));
        }
    };
    hadamard_layer();
    for (std::size_t k = 0; k < iterations; ++k) {
        c.append(Gate::phase_flip(sorted));
        hadamard_layer();
        c.append(Gate::phase_flip({0}));
        hadamard_layer();
    }
    return c;
}

double marked_probability(const QuantumState &state, const std::vector<std::size_t> &marked) {
    double p = 0;
    for (std::size_t i : marked) {
        if (i >= state.dim()) {
            throw Error(ErrorCode::InvalidMarkedSet, "marked index outside the register");
        }
        p += std::norm(state[i]);
    }
    return p;
}

}  // namespace qlinsys
