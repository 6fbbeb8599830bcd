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

#include "qlinsys/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "qlinsys/error.hpp"

namespace qlinsys {

namespace {

using Mat2 = std::array<Complex, 4>;

Mat2 single_qubit_matrix(GateKind kind) {
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex i{0, 1};
    switch (kind) {
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::X:
            return {0, 1, 1, 0};
        case GateKind::Y:
            return {0, -i, i, 0};
        case GateKind::Z:
            return {1, 0, 0, -1};
        case GateKind::S:
            return {1, 0, 0, i};
        case GateKind::Sdg:
            return {1, 0, 0, -i};
        case GateKind::T:
            return {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};
        default:
            throw Error(ErrorCode::UnsupportedGate, std::string(gate_name(kind)) + " is not a single-qubit gate");
    }
}

std::size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
            return 2;
        case GateKind::PhaseFlipDiag:
            return 0;
        default:
            return 1;
    }
}

}  // namespace

QuantumState::QuantumState(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ == 0 || n_qubits_ > 30 || amplitudes_.size() != (std::size_t{1} << n_qubits_)) {
        throw Error(ErrorCode::InvalidTarget, "amplitude count must be 2^n for n >= 1");
    }
    if (std::abs(norm_squared() - 1.0) > 1e-10) {
        throw Error(ErrorCode::NotNormalized, "state norm^2 is " + std::to_string(norm_squared()));
    }
}

QuantumState QuantumState::basis(std::size_t n_qubits, std::size_t index) {
    if (n_qubits == 0 || n_qubits > 30 || index >= (std::size_t{1} << n_qubits)) {
        throw Error(ErrorCode::InvalidTarget, "basis index " + std::to_string(index) + " out of range");
    }
    std::vector<Complex> a(std::size_t{1} << n_qubits);
    a[index] = 1.0;
    return QuantumState(n_qubits, std::move(a));
}

QuantumState QuantumState::from_real(std::span<const double> amplitudes) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amplitudes.size()) {
        ++n;
    }
    return QuantumState(n, std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
}

double QuantumState::norm_squared() const {
    double s = 0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::S:
            return "S";
        case GateKind::Sdg:
            return "Sdg";
        case GateKind::T:
            return "T";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CZ:
            return "CZ";
        case GateKind::PhaseFlipDiag:
            return "PhaseFlipDiag";
    }
    return "?";
}

void validate_gate(const Gate &gate, std::size_t n_qubits) {
    if (gate.targets.size() != arity(gate.kind)) {
        throw Error(ErrorCode::InvalidTarget, std::string(gate_name(gate.kind)) + " takes " +
                                                  std::to_string(arity(gate.kind)) + " target(s)");
    }
    for (std::size_t k = 0; k < gate.targets.size(); ++k) {
        if (gate.targets[k] >= n_qubits) {
            throw Error(ErrorCode::InvalidTarget, "qubit " + std::to_string(gate.targets[k]) + " outside a " +
                                                      std::to_string(n_qubits) + "-qubit register");
        }
        for (std::size_t l = 0; l < k; ++l) {
            if (gate.targets[l] == gate.targets[k]) {
                throw Error(ErrorCode::InvalidTarget, "repeated qubit in gate targets");
            }
        }
    }
    if (gate.kind == GateKind::PhaseFlipDiag) {
        std::vector<std::size_t> sorted = gate.flipped;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error(ErrorCode::InvalidTarget, "repeated basis index in phase flip");
        }
        if (!sorted.empty() && sorted.back() >= (std::size_t{1} << n_qubits)) {
            throw Error(ErrorCode::InvalidTarget, "phase flip index outside the register");
        }
    }
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw Error(ErrorCode::InvalidTarget, "circuit needs at least one qubit");
    }
}

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> ops) : Circuit(n_qubits) {
    for (auto &g : ops) {
        append(std::move(g));
    }
}

Circuit &Circuit::append(Gate gate) {
    validate_gate(gate, n_qubits_);
    ops_.push_back(std::move(gate));
    return *this;
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    auto m = zero(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    auto m = zero(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim != b.dim) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product of different sizes");
    }
    auto c = ComplexMatrix::zero(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            for (std::size_t j = 0; j < a.dim; ++j) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    auto c = a;
    for (auto &e : c.entries) {
        e *= s;
    }
    return c;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim != b.dim) {
        throw Error(ErrorCode::DimensionMismatch, "matrix sum of different sizes");
    }
    auto c = a;
    for (std::size_t k = 0; k < c.entries.size(); ++k) {
        c.entries[k] += b.entries[k];
    }
    return c;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) { return a + Complex(-1.0) * b; }

double max_abs(const ComplexMatrix &a) {
    double m = 0;
    for (const auto &e : a.entries) {
        m = std::max(m, std::abs(e));
    }
    return m;
}

QuantumState apply_gate(const QuantumState &state, const Gate &gate) {
    validate_gate(gate, state.n_qubits());
    std::vector<Complex> a(state.amplitudes().begin(), state.amplitudes().end());
    const std::size_t dim = a.size();
    switch (gate.kind) {
        case GateKind::CNOT: {
            const std::size_t cbit = std::size_t{1} << gate.targets[0];
            const std::size_t tbit = std::size_t{1} << gate.targets[1];
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & cbit) && !(i & tbit)) {
                    std::swap(a[i], a[i | tbit]);
                }
            }
            break;
        }
        case GateKind::CZ: {
            const std::size_t mask = (std::size_t{1} << gate.targets[0]) | (std::size_t{1} << gate.targets[1]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & mask) == mask) {
                    a[i] = -a[i];
                }
            }
            break;
        }
        case GateKind::PhaseFlipDiag:
            for (std::size_t i : gate.flipped) {
                a[i] = -a[i];
            }
            break;
        default: {
            const auto m = single_qubit_matrix(gate.kind);
            const std::size_t bit = std::size_t{1} << gate.targets[0];
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & bit) {
                    continue;
                }
                const Complex a0 = a[i];
                const Complex a1 = a[i | bit];
                a[i] = m[0] * a0 + m[1] * a1;
                a[i | bit] = m[2] * a0 + m[3] * a1;
            }
        }
    }
    return QuantumState(state.n_qubits(), std::move(a));
}

QuantumState run(const Circuit &circuit, std::size_t initial_basis_index) {
    auto state = QuantumState::basis(circuit.n_qubits(), initial_basis_index);
    for (const auto &g : circuit.ops()) {
        state = apply_gate(state, g);
    }
    return state;
}

ComplexMatrix unitary_of(const Circuit &circuit) {
    const std::size_t dim = std::size_t{1} << circuit.n_qubits();
    auto u = ComplexMatrix::zero(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        auto col = run(circuit, j);
        for (std::size_t i = 0; i < dim; ++i) {
            u(i, j) = col[i];
        }
    }
    return u;
}

std::vector<double> probabilities(const QuantumState &state) {
    std::vector<double> p;
    p.reserve(state.dim());
    for (const auto &a : state.amplitudes()) {
        p.push_back(std::norm(a));
    }
    return p;
}

std::string outcome_label(std::size_t index, std::size_t n_qubits) {
    std::string s(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if (index & (std::size_t{1} << q)) {
            s[n_qubits - 1 - q] = '1';
        }
    }
    return s;
}

double ShotTable::frequency(const std::string &outcome) const {
    auto it = counts.find(outcome);
    if (it == counts.end() || shots == 0) {
        return 0.0;
    }
    return static_cast<double>(it->second) / static_cast<double>(shots);
}

ShotTable sample(const QuantumState &state, std::uint64_t shots, std::uint64_t seed) {
    auto p = probabilities(state);
    return sample_distribution(p, state.n_qubits(), shots, seed);
}

ShotTable sample_distribution(std::span<const double> probs, std::size_t n_qubits, std::uint64_t shots,
                              std::uint64_t seed) {
    if (shots == 0) {
        throw Error(ErrorCode::InvalidCounts, "shots must be >= 1");
    }
    if (probs.size() != (std::size_t{1} << n_qubits)) {
        throw Error(ErrorCode::DimensionMismatch, "distribution size must be 2^n");
    }
    std::vector<double> cdf(probs.size());
    double total = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] < -1e-12) {
            throw Error(ErrorCode::NegativeProbability, "negative outcome probability");
        }
        total += std::max(probs[i], 0.0);
        cdf[i] = total;
        if (probs[i] > 0) {
            last_nonzero = i;
        }
    }
    if (!(total > 0)) {
        throw Error(ErrorCode::InvalidProbability, "distribution has zero mass");
    }

    ShotTable table;
    table.shots = shots;
    table.seed = seed;
    table.n_qubits = n_qubits;
    std::vector<std::uint64_t> counts(probs.size(), 0);
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53 random bits -> uniform double in [0, 1).
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t k = it == cdf.end() ? last_nonzero : static_cast<std::size_t>(it - cdf.begin());
        ++counts[k];
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        table.counts[outcome_label(i, n_qubits)] = counts[i];
    }
    return table;
}

std::vector<double> amplitudes_from_probabilities(std::span<const double> probs) {
    std::vector<double> out;
    out.reserve(probs.size());
    for (double p : probs) {
        if (p < -1e-12) {
            throw Error(ErrorCode::NegativeProbability, "probability " + std::to_string(p) + " is negative");
        }
        out.push_back(std::sqrt(std::max(p, 0.0)));
    }
    return out;
}

}  // namespace qlinsys
