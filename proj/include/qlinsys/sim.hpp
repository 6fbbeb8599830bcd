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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qlinsys {

using Complex = std::complex<double>;

/// Pure state of `n_qubits` qubits. Qubit 0 is the least-significant bit of
/// the basis index.
class QuantumState {
   public:
    QuantumState() = default;
    /// Throws InvalidTarget for zero qubits or a size that is not 2^n.
    QuantumState(std::size_t n_qubits, std::vector<Complex> amplitudes);

    static QuantumState basis(std::size_t n_qubits, std::size_t index);
    static QuantumState from_real(std::span<const double> amplitudes);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }
    double norm_squared() const;

   private:
    std::size_t n_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

enum class GateKind { H, X, Y, Z, S, Sdg, T, CNOT, CZ, PhaseFlipDiag };

const char *gate_name(GateKind kind);

struct Gate {
    GateKind kind = GateKind::H;
    /// Control first for CNOT/CZ. Empty for PhaseFlipDiag, which acts on the whole register.
    std::vector<std::size_t> targets;
    /// Basis indices whose amplitude PhaseFlipDiag negates.
    std::vector<std::size_t> flipped;

    static Gate h(std::size_t q) { return {GateKind::H, {q}, {}}; }
    static Gate x(std::size_t q) { return {GateKind::X, {q}, {}}; }
    static Gate y(std::size_t q) { return {GateKind::Y, {q}, {}}; }
    static Gate z(std::size_t q) { return {GateKind::Z, {q}, {}}; }
    static Gate s(std::size_t q) { return {GateKind::S, {q}, {}}; }
    static Gate sdg(std::size_t q) { return {GateKind::Sdg, {q}, {}}; }
    static Gate t(std::size_t q) { return {GateKind::T, {q}, {}}; }
    static Gate cnot(std::size_t control, std::size_t target) { return {GateKind::CNOT, {control, target}, {}}; }
    static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b}, {}}; }
    static Gate phase_flip(std::vector<std::size_t> indices) { return {GateKind::PhaseFlipDiag, {}, std::move(indices)}; }

    bool operator==(const Gate &) const = default;
};

/// Throws InvalidTarget if `gate` does not fit an `n_qubits` register.
void validate_gate(const Gate &gate, std::size_t n_qubits);

class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t n_qubits);
    Circuit(std::size_t n_qubits, std::vector<Gate> ops);

    Circuit &append(Gate gate);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    const std::vector<Gate> &ops() const noexcept { return ops_; }
    std::size_t size() const noexcept { return ops_.size(); }
    bool empty() const noexcept { return ops_.empty(); }

    bool operator==(const Circuit &) const = default;

   private:
    std::size_t n_qubits_ = 0;
    std::vector<Gate> ops_;
};

/// Square complex matrix, row-major.
struct ComplexMatrix {
    std::size_t dim = 0;
    std::vector<Complex> entries;

    static ComplexMatrix zero(std::size_t dim) { return {dim, std::vector<Complex>(dim * dim)}; }
    static ComplexMatrix identity(std::size_t dim);

    Complex &operator()(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    Complex operator()(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, const ComplexMatrix &a);
ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs(const ComplexMatrix &a);

QuantumState apply_gate(const QuantumState &state, const Gate &gate);

/// Runs `circuit` from basis state |initial_basis_index>.
QuantumState run(const Circuit &circuit, std::size_t initial_basis_index);

/// Column j is run(circuit, j).
ComplexMatrix unitary_of(const Circuit &circuit);

std::vector<double> probabilities(const QuantumState &state);

/// Bit string of `index` with qubit n-1 leftmost: index 1 on 2 qubits is "01".
std::string outcome_label(std::size_t index, std::size_t n_qubits);

struct ShotTable {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::size_t n_qubits = 0;
    /// Every outcome label is present, zero counts included.
    std::map<std::string, std::uint64_t> counts;

    double frequency(const std::string &outcome) const;
};

/// Draws `shots` outcomes with a seeded mt19937_64 and inverse-CDF lookup,
/// so counts are reproducible across platforms.
ShotTable sample(const QuantumState &state, std::uint64_t shots, std::uint64_t seed);
/// Same sampler over an explicit outcome distribution of size 2^n_qubits.
ShotTable sample_distribution(std::span<const double> probs, std::size_t n_qubits, std::uint64_t shots,
                              std::uint64_t seed);

/// Entrywise square root. Recovers |x_i| only; signs are lost. Throws
/// NegativeProbability for entries below -1e-12.
std::vector<double> amplitudes_from_probabilities(std::span<const double> probs);

}  // namespace qlinsys
