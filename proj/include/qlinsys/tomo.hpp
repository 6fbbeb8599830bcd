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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlinsys/sim.hpp"

namespace qlinsys {

/// Hermitian, unit-trace operator on 2^n amplitudes.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    /// Throws InvalidMatrix unless Hermitian and trace one within 1e-10.
    explicit DensityMatrix(ComplexMatrix entries);

    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const noexcept { return m_.dim; }
    Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    const ComplexMatrix &matrix() const noexcept { return m_; }

    double purity() const;
    /// Ascending eigenvalues.
    std::vector<double> eigenvalues() const;

   private:
    ComplexMatrix m_;
};

DensityMatrix density_from_state(const QuantumState &psi);

/// (1 - p) rho + p I / dim. Throws InvalidProbability unless 0 <= p <= 1.
DensityMatrix apply_depolarizing(const DensityMatrix &rho, double p);

/// Depolarizing strength giving pure-target fidelity f on a dim-dimensional state.
double depolarizing_for_fidelity(double fidelity, std::size_t dim = 4);

/// Two-letter Pauli word over {I,X,Y,Z}. The left letter acts on qubit 1, the
/// right letter on qubit 0, matching outcome_label's bit order.
ComplexMatrix pauli_matrix(const std::string &word);
/// "II", "IX", ..., "ZZ" in that order.
const std::vector<std::string> &pauli_words();

struct TomographyMode {
    /// nullopt = exact trace(rho P).
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;

    static TomographyMode analytic() { return {}; }
    static TomographyMode sampled(std::uint64_t shots, std::uint64_t seed) { return {shots, seed}; }
};

struct ExpectationTable {
    std::map<std::string, double> values;
    TomographyMode mode;

    double at(const std::string &word) const;
};

/// Two-qubit Pauli expectations. Sampled mode measures the nine settings
/// {X,Y,Z}^2 with `shots` each; setting k (row-major, XX first) uses seed + k.
/// Words with one identity letter come from the marginal of the setting that
/// pairs the measured letter with Z.
ExpectationTable pauli_expectations(const DensityMatrix &rho, const TomographyMode &mode);

/// Linear inversion rho = 1/4 sum_P <P> P, then projection onto physical
/// states by clipping negative eigenvalues and renormalizing the trace.
DensityMatrix reconstruct(const ExpectationTable &table);

/// Nearest-physical projection used by reconstruct(); accepts any Hermitian input.
DensityMatrix project_physical(const ComplexMatrix &hermitian);

enum class FidelityConvention {
    Overlap,  ///< <psi|rho|psi>
    Sqrt,     ///< sqrt(<psi|rho|psi>), the Uhlmann root fidelity for a pure target
};

/// Pure-target fidelity, clamped to [0, 1]. Throws DimensionMismatch.
double fidelity(const DensityMatrix &rho, const QuantumState &psi,
                FidelityConvention convention = FidelityConvention::Overlap);

}  // namespace qlinsys
