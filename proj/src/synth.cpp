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

#include "qlinsys/synth.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "qlinsys/error.hpp"

namespace qlinsys {

namespace {

using Real4 = std::array<double, 16>;
using Key = std::array<long long, 16>;

struct KeyHash {
    std::size_t operator()(const Key &k) const noexcept {
        std::size_t h = 0;
        for (long long v : k) {
            h ^= std::hash<long long>()(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

const std::array<Gate, 9> kVocabulary{
    Gate::h(0), Gate::h(1), Gate::x(0), Gate::x(1), Gate::z(0), Gate::z(1), Gate::cnot(0, 1), Gate::cnot(1, 0),
    Gate::cz(0, 1),
};

Real4 real_unitary(const Gate &g) {
    auto u = unitary_of(Circuit(2, {g}));
    Real4 r{};
    for (std::size_t k = 0; k < 16; ++k) {
        r[k] = u.entries[k].real();
    }
    return r;
}

Real4 multiply(const Real4 &a, const Real4 &b) {
    Real4 c{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            for (std::size_t j = 0; j < 4; ++j) {
                c[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
            }
        }
    }
    return c;
}

// Sign-canonical key: the first entry that is not zero is made positive.
Key canonical_key(const Real4 &m) {
    Key k{};
    int sign = 0;
    for (std::size_t i = 0; i < 16; ++i) {
        k[i] = std::llround(m[i] * 1e12);
        if (sign == 0 && k[i] != 0) {
            sign = k[i] > 0 ? 1 : -1;
        }
    }
    if (sign < 0) {
        for (auto &v : k) {
            v = -v;
        }
    }
    return k;
}

struct Node {
    Real4 unitary;
    std::vector<std::uint8_t> path;
};

/// Lazily deepened BFS tree shared by all queries against one vocabulary.
class CircuitSearch {
   public:
    CircuitSearch() {
        for (const auto &g : kVocabulary) {
            gate_unitaries_.push_back(real_unitary(g));
        }
        Real4 id{};
        for (std::size_t i = 0; i < 4; ++i) {
            id[i * 4 + i] = 1.0;
        }
        visited_.emplace(canonical_key(id), std::vector<std::uint8_t>{});
        frontier_.push_back({id, {}});
    }

    const std::vector<std::uint8_t> *find(const Real4 &target, std::size_t max_gates) {
        auto key = canonical_key(target);
        while (true) {
            auto it = visited_.find(key);
            if (it != visited_.end()) {
                return it->second.size() <= max_gates ? &it->second : nullptr;
            }
            if (depth_ >= max_gates || frontier_.empty()) {
                return nullptr;
            }
            deepen();
        }
    }

   private:
    void deepen() {
        std::vector<Node> next;
        for (const auto &node : frontier_) {
            for (std::size_t g = 0; g < gate_unitaries_.size(); ++g) {
                // Later gates act on the left.
                Real4 u = multiply(gate_unitaries_[g], node.unitary);
                auto key = canonical_key(u);
                if (visited_.contains(key)) {
                    continue;
                }
                auto path = node.path;
                path.push_back(static_cast<std::uint8_t>(g));
                visited_.emplace(key, path);
                next.push_back({u, std::move(path)});
            }
        }
        frontier_ = std::move(next);
        ++depth_;
    }

    std::vector<Real4> gate_unitaries_;
    std::unordered_map<Key, std::vector<std::uint8_t>, KeyHash> visited_;
    std::vector<Node> frontier_;
    std::size_t depth_ = 0;
};

Real4 to_real4(const RealMatrix &m) {
    Real4 r{};
    std::copy(m.entries().begin(), m.entries().end(), r.begin());
    return r;
}

SynthesisResult finish(const std::vector<std::uint8_t> &path, const RealMatrix &target) {
    SynthesisResult result;
    for (auto g : path) {
        result.circuit.append(kVocabulary[g]);
    }
    result.gate_count = path.size();
    auto u = unitary_of(result.circuit);
    double dev[2] = {0, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            dev[0] = std::max(dev[0], std::abs(u(i, j) - target(i, j)));
            dev[1] = std::max(dev[1], std::abs(u(i, j) + target(i, j)));
        }
    }
    result.matched_sign = dev[0] <= dev[1] ? 1 : -1;
    result.max_deviation = std::min(dev[0], dev[1]);
    return result;
}

SynthesisResult synthesize_with(CircuitSearch &search, const RealMatrix &target, std::size_t max_gates) {
    if (target.dim() != 4 || !check_orthonormal_columns(target, kExactTol)) {
        throw Error(ErrorCode::NotOrthogonal, "synthesis target must be a 4x4 orthogonal matrix");
    }
    const auto *path = search.find(to_real4(target), max_gates);
    if (path == nullptr) {
        throw Error(ErrorCode::NotFound, "no circuit with at most " + std::to_string(max_gates) + " gates");
    }
    return finish(*path, target);
}

}  // namespace

std::span<const Gate> gate_vocabulary() { return kVocabulary; }

SynthesisResult synthesize(const RealMatrix &target, std::size_t max_gates) {
    CircuitSearch search;
    return synthesize_with(search, target, max_gates);
}

std::map<FamilyLabel, SynthesisResult> synthesize_family(std::size_t max_gates) {
    CircuitSearch search;
    std::map<FamilyLabel, SynthesisResult> out;
    for (const auto &spec : enumerate_family()) {
        out.emplace(spec.label, synthesize_with(search, inverse_operator(spec.matrix), max_gates));
    }
    return out;
}

double verify(const Circuit &circuit, const RealMatrix &a) {
    if (circuit.n_qubits() != 2 || a.dim() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "verify expects a 2-qubit circuit and a 4x4 matrix");
    }
    auto u = unitary_of(circuit);
    double dev[2] = {0, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            Complex ua = 0;
            for (std::size_t k = 0; k < 4; ++k) {
                ua += u(i, k) * a(k, j);
            }
            const double id = i == j ? 1.0 : 0.0;
            dev[0] = std::max(dev[0], std::abs(ua - id));
            dev[1] = std::max(dev[1], std::abs(-ua - id));
        }
    }
    return std::min(dev[0], dev[1]);
}

}  // namespace qlinsys
