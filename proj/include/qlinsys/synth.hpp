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

#include <array>
#include <cstddef>
#include <map>
#include <span>

#include "qlinsys/family.hpp"
#include "qlinsys/linsys.hpp"
#include "qlinsys/sim.hpp"

namespace qlinsys {

/// Real two-qubit instruction set, in tie-breaking order.
std::span<const Gate> gate_vocabulary();

struct SynthesisResult {
    Circuit circuit{2};
    std::size_t gate_count = 0;
    /// unitary_of(circuit) == matched_sign * target.
    int matched_sign = 1;
    double max_deviation = 0;
};

inline constexpr std::size_t kDefaultMaxGates = 8;

/// Shortest circuit over gate_vocabulary() realizing +-target, ties broken
/// lexicographically by vocabulary index in application order.
///
/// Breadth-first over gate sequences. Each reached unitary is keyed by its
/// entries rounded to 1e-12 after fixing the global sign, and only the first
/// (hence lexicographically smallest) sequence reaching it is kept.
///
/// Throws NotOrthogonal when target is not a 4x4 orthogonal matrix, NotFound
/// when no circuit of at most max_gates gates exists.
SynthesisResult synthesize(const RealMatrix &target, std::size_t max_gates = kDefaultMaxGates);

/// Synthesizes inverse_operator(matrix_for(L)) for all 48 labels.
std::map<FamilyLabel, SynthesisResult> synthesize_family(std::size_t max_gates = kDefaultMaxGates);

/// min over s in {+1,-1} of max |s * unitary_of(circuit) * A - I|.
double verify(const Circuit &circuit, const RealMatrix &a);

}  // namespace qlinsys
