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

#include "qlinsys/io.hpp"

#include <charconv>
#include <sstream>

#include "qlinsys/error.hpp"

namespace qlinsys {

std::string format_number(double v) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string to_qasm(const Circuit &circuit) {
    std::ostringstream os;
    const auto n = circuit.n_qubits();
    os << "OPENQASM 2.0;\n"
       << "include \"qelib1.inc\";\n"
       << "qreg q[" << n << "];\n"
       << "creg c[" << n << "];\n";
    for (const auto &g : circuit.ops()) {
        const char *op = nullptr;
        switch (g.kind) {
            case GateKind::H:
                op = "h";
                break;
            case GateKind::X:
                op = "x";
                break;
            case GateKind::Y:
                op = "y";
                break;
            case GateKind::Z:
                op = "z";
                break;
            case GateKind::S:
                op = "s";
                break;
            case GateKind::Sdg:
                op = "sdg";
                break;
            case GateKind::T:
                op = "t";
                break;
            case GateKind::CNOT:
                op = "cx";
                break;
            case GateKind::CZ:
                op = "cz";
                break;
            case GateKind::PhaseFlipDiag:
                throw Error(ErrorCode::UnsupportedGate, "PhaseFlipDiag has no OpenQASM 2.0 equivalent");
        }
        os << op << ' ';
        for (std::size_t k = 0; k < g.targets.size(); ++k) {
            os << (k ? "," : "") << "q[" << g.targets[k] << ']';
        }
        os << ";\n";
    }
    os << "measure q -> c;\n";
    return os.str();
}

nlohmann::json to_json(const Circuit &circuit) {
    auto gates = nlohmann::json::array();
    for (const auto &g : circuit.ops()) {
        nlohmann::json j{{"kind", gate_name(g.kind)}, {"targets", g.targets}};
        if (g.kind == GateKind::PhaseFlipDiag) {
            j["flipped"] = g.flipped;
        }
        gates.push_back(std::move(j));
    }
    return gates;
}

nlohmann::json to_json(const LinearSystemSpec &spec) {
    return {
        {"label", spec.label.name()},
        {"subset", spec.label.subset()},
        {"matrix", std::vector<double>(spec.matrix.entries().begin(), spec.matrix.entries().end())},
        {"y", std::vector<double>(spec.y.entries().begin(), spec.y.entries().end())},
        {"equations", spec.equations},
    };
}

nlohmann::json to_json(const std::string &label, const SynthesisResult &result) {
    return {
        {"label", label},
        {"gates", to_json(result.circuit)},
        {"gate_count", result.gate_count},
        {"matched_sign", result.matched_sign},
        {"max_deviation", result.max_deviation},
    };
}

nlohmann::json to_json(const std::string &label, const ShotTable &table) {
    nlohmann::json counts = nlohmann::json::object();
    nlohmann::json freqs = nlohmann::json::object();
    for (const auto &[outcome, n] : table.counts) {
        counts[outcome] = n;
        freqs[outcome] = table.frequency(outcome);
    }
    return {
        {"label", label}, {"shots", table.shots}, {"seed", table.seed}, {"counts", counts}, {"frequencies", freqs},
    };
}

nlohmann::json to_json(const DensityMatrix &rho) {
    std::vector<std::vector<double>> re(rho.dim(), std::vector<double>(rho.dim()));
    auto im = re;
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            re[r][c] = rho(r, c).real();
            im[r][c] = rho(r, c).imag();
        }
    }
    return {{"dim", rho.dim()}, {"re", re}, {"im", im}};
}

std::string density_csv(const DensityMatrix &rho) {
    std::ostringstream os;
    os << "row,col,re,im\n";
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            os << r << ',' << c << ',' << format_number(rho(r, c).real()) << ','
               << format_number(rho(r, c).imag()) << '\n';
        }
    }
    return os.str();
}

}  // namespace qlinsys
