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

#include "qlinsys/tomo.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>

#include "qlinsys/error.hpp"

namespace qlinsys {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd e(m.dim, m.dim);
    for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) {
            e(r, c) = m(r, c);
        }
    }
    return e;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd &e) {
    auto m = ComplexMatrix::zero(static_cast<std::size_t>(e.rows()));
    for (std::size_t r = 0; r < m.dim; ++r) {
        for (std::size_t c = 0; c < m.dim; ++c) {
            m(r, c) = e(r, c);
        }
    }
    return m;
}

std::array<Complex, 4> single_pauli(char letter) {
    const Complex i{0, 1};
    switch (letter) {
        case 'I':
            return {1, 0, 0, 1};
        case 'X':
            return {0, 1, 1, 0};
        case 'Y':
            return {0, -i, i, 0};
        case 'Z':
            return {1, 0, 0, -1};
        default:
            throw Error(ErrorCode::ParseError, std::string("bad Pauli letter '") + letter + "'");
    }
}

// Basis change taking the eigenbasis of `letter` on `qubit` onto the Z basis.
void append_basis_change(Circuit &c, char letter, std::size_t qubit) {
    if (letter == 'X') {
        c.append(Gate::h(qubit));
    } else if (letter == 'Y') {
        c.append(Gate::sdg(qubit));
        c.append(Gate::h(qubit));
    }
}

constexpr std::array<char, 3> kMeasured{'X', 'Y', 'Z'};

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix entries) : m_(std::move(entries)) {
    if (m_.dim == 0 || m_.entries.size() != m_.dim * m_.dim) {
        throw Error(ErrorCode::InvalidMatrix, "density matrix must be square and non-empty");
    }
    if (max_abs(m_ - m_.adjoint()) > 1e-10) {
        throw Error(ErrorCode::InvalidMatrix, "density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - 1.0) > 1e-10) {
        throw Error(ErrorCode::InvalidMatrix, "density matrix trace is not 1");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(Complex(1.0 / static_cast<double>(dim)) * ComplexMatrix::identity(dim));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

std::vector<double> DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m_), Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

DensityMatrix density_from_state(const QuantumState &psi) {
    auto m = ComplexMatrix::zero(psi.dim());
    for (std::size_t r = 0; r < psi.dim(); ++r) {
        for (std::size_t c = 0; c < psi.dim(); ++c) {
            m(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix apply_depolarizing(const DensityMatrix &rho, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::InvalidProbability, "depolarizing probability must lie in [0, 1]");
    }
    const auto d = static_cast<double>(rho.dim());
    return DensityMatrix(Complex(1.0 - p) * rho.matrix() + Complex(p / d) * ComplexMatrix::identity(rho.dim()));
}

double depolarizing_for_fidelity(double fidelity, std::size_t dim) {
    // F = 1 - p (1 - 1/d)
    const auto d = static_cast<double>(dim);
    return (1.0 - fidelity) * d / (d - 1.0);
}

ComplexMatrix pauli_matrix(const std::string &word) {
    if (word.size() != 2) {
        throw Error(ErrorCode::ParseError, "Pauli word must have two letters: '" + word + "'");
    }
    const auto hi = single_pauli(word[0]);
    const auto lo = single_pauli(word[1]);
    auto m = ComplexMatrix::zero(4);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m(r, c) = hi[(r >> 1) * 2 + (c >> 1)] * lo[(r & 1) * 2 + (c & 1)];
        }
    }
    return m;
}

const std::vector<std::string> &pauli_words() {
    static const std::vector<std::string> words = [] {
        std::vector<std::string> w;
        for (char a : {'I', 'X', 'Y', 'Z'}) {
            for (char b : {'I', 'X', 'Y', 'Z'}) {
                w.push_back(std::string{a, b});
            }
        }
        return w;
    }();
    return words;
}

double ExpectationTable::at(const std::string &word) const {
    auto it = values.find(word);
    if (it == values.end()) {
        throw Error(ErrorCode::ParseError, "missing Pauli word " + word);
    }
    return it->second;
}

ExpectationTable pauli_expectations(const DensityMatrix &rho, const TomographyMode &mode) {
    if (rho.dim() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "tomography is implemented for two qubits");
    }
    ExpectationTable table;
    table.mode = mode;
    if (!mode.shots) {
        for (const auto &w : pauli_words()) {
            table.values[w] = (pauli_matrix(w) * rho.matrix()).trace().real();
        }
        table.values["II"] = 1.0;
        return table;
    }

    table.values["II"] = 1.0;
    for (std::size_t ia = 0; ia < 3; ++ia) {
        for (std::size_t ib = 0; ib < 3; ++ib) {
            const char a = kMeasured[ia];
            const char b = kMeasured[ib];
            Circuit rotation(2);
            append_basis_change(rotation, a, 1);
            append_basis_change(rotation, b, 0);
            const auto v = unitary_of(rotation);
            const auto rotated = v * rho.matrix() * v.adjoint();
            std::vector<double> probs(4);
            for (std::size_t i = 0; i < 4; ++i) {
                probs[i] = std::max(rotated(i, i).real(), 0.0);
            }
            const auto shots = sample_distribution(probs, 2, *mode.shots, mode.seed + ia * 3 + ib);

            double both = 0, hi = 0, lo = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                const double n = static_cast<double>(shots.counts.at(outcome_label(i, 2)));
                const double s1 = (i & 2) ? -1.0 : 1.0;
                const double s0 = (i & 1) ? -1.0 : 1.0;
                both += s1 * s0 * n;
                hi += s1 * n;
                lo += s0 * n;
            }
            const auto total = static_cast<double>(shots.shots);
            table.values[std::string{a, b}] = both / total;
            if (b == 'Z') {
                table.values[std::string{a, 'I'}] = hi / total;
            }
            if (a == 'Z') {
                table.values[std::string{'I', b}] = lo / total;
            }
        }
    }
    return table;
}

DensityMatrix project_physical(const ComplexMatrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(hermitian));
    Eigen::VectorXd ev = solver.eigenvalues().cwiseMax(0.0);
    const double total = ev.sum();
    if (!(total > 0)) {
        return DensityMatrix::maximally_mixed(hermitian.dim);
    }
    ev /= total;
    const auto &vecs = solver.eigenvectors();
    Eigen::MatrixXcd rho = vecs * ev.cast<Complex>().asDiagonal() * vecs.adjoint();
    // Restore exact Hermiticity lost to rounding.
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return DensityMatrix(from_eigen(rho));
}

DensityMatrix reconstruct(const ExpectationTable &table) {
    auto linear = ComplexMatrix::zero(4);
    for (const auto &w : pauli_words()) {
        linear = linear + Complex(table.at(w) / 4.0) * pauli_matrix(w);
    }
    return project_physical(linear);
}

double fidelity(const DensityMatrix &rho, const QuantumState &psi, FidelityConvention convention) {
    if (rho.dim() != psi.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state and density matrix sizes differ");
    }
    Complex f = 0;
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            f += std::conj(psi[r]) * rho(r, c) * psi[c];
        }
    }
    const double overlap = std::clamp(f.real(), 0.0, 1.0);
    return convention == FidelityConvention::Sqrt ? std::sqrt(overlap) : overlap;
}

}  // namespace qlinsys
