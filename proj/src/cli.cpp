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

#include "qlinsys/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "qlinsys/error.hpp"
#include "qlinsys/family.hpp"
#include "qlinsys/grover.hpp"
#include "qlinsys/io.hpp"
#include "qlinsys/linsys.hpp"
#include "qlinsys/sim.hpp"
#include "qlinsys/synth.hpp"
#include "qlinsys/tomo.hpp"

namespace qlinsys::cli {

namespace {

using nlohmann::json;

// Where the system comes from: a family label or a CSV matrix file.
struct Source {
    std::string label;
    std::string matrix_path;

    std::string name() const { return label.empty() ? matrix_path : FamilyLabel::parse(label).name(); }
    RealMatrix matrix() const {
        return label.empty() ? read_matrix_csv_file(matrix_path) : matrix_for(FamilyLabel::parse(label));
    }
};

void add_source_options(CLI::App &cmd, Source &src) {
    auto *l = cmd.add_option("--label", src.label, "family label such as A_1234");
    auto *m = cmd.add_option("--matrix", src.matrix_path, "CSV file holding A")->check(CLI::ExistingFile);
    l->excludes(m);
    m->excludes(l);
}

void require_source(const Source &src) {
    if (src.label.empty() && src.matrix_path.empty()) {
        throw CLI::RequiredError("--label or --matrix");
    }
}

std::string vector_text(std::span<const double> v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + format_number(v[i]);
    }
    return s + "]";
}

std::string percent(double fraction) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << fraction * 100.0;
    return os.str();
}

// Table 1 shows outcomes of a five-qubit chip as four-bit strings.
std::string padded(const std::string &outcome) { return std::string(4 - std::min<std::size_t>(4, outcome.size()), '0') + outcome; }

struct PreparedCircuit {
    RealMatrix a;
    SynthesisResult synthesis;
};

PreparedCircuit prepare(const Source &src, std::size_t max_gates) {
    auto a = src.matrix();
    if (a.dim() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "the circuit path needs a 4x4 matrix");
    }
    auto synthesis = synthesize(inverse_operator(a), max_gates);
    return {std::move(a), std::move(synthesis)};
}

DensityMatrix noisy_solution(const QuantumState &state, double noise) {
    return apply_depolarizing(density_from_state(state), noise);
}

std::vector<double> diagonal(const DensityMatrix &rho) {
    std::vector<double> d(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        d[i] = std::max(rho(i, i).real(), 0.0);
    }
    return d;
}

// ---- family list ---------------------------------------------------------

struct FamilyListOptions {
    std::string class_filter;
    std::string output = "table";
};

void cmd_family_list(const FamilyListOptions &opt, std::ostream &out) {
    auto specs = enumerate_family();
    json all = json::array();
    for (const auto &spec : specs) {
        if (!opt.class_filter.empty() && opt.class_filter[0] != class_tag(spec.label.column_class)) {
            continue;
        }
        if (opt.output == "json") {
            all.push_back(to_json(spec));
            continue;
        }
        out << spec.label.name() << '\t' << spec.label.subset() << '\t';
        const auto e = spec.matrix.entries();
        for (std::size_t k = 0; k < e.size(); ++k) {
            out << (k ? "," : "") << format_number(e[k]);
        }
        out << '\n';
    }
    if (opt.output == "json") {
        out << all.dump(2) << '\n';
    }
}

// ---- solve -----------------------------------------------------------------

struct SolveOptions {
    Source src;
    std::string y;
    std::optional<std::size_t> basis;
    std::string output = "table";
};

RealVector read_y(const std::string &text, std::size_t dim) {
    if (text.empty()) {
        return RealVector::basis(dim, 0);
    }
    if (std::filesystem::is_regular_file(text)) {
        auto m = std::ifstream(text);
        std::stringstream ss;
        ss << m.rdbuf();
        std::string joined;
        std::string line;
        while (std::getline(ss, line)) {
            if (!line.empty() && line[0] != '#') {
                joined += (joined.empty() ? "" : ",") + line;
            }
        }
        return parse_vector_csv(joined);
    }
    return parse_vector_csv(text);
}

void cmd_solve(const SolveOptions &opt, std::ostream &out) {
    require_source(opt.src);
    auto a = opt.src.matrix();
    auto y = opt.basis ? RealVector::basis(a.dim(), *opt.basis) : read_y(opt.y, a.dim());
    auto x = solve(a, y);
    std::vector<double> probs;
    for (double v : x.entries()) {
        probs.push_back(v * v);
    }
    auto readout = amplitudes_from_probabilities(probs);
    const double res = residual(a, x, y);
    if (opt.output == "json") {
        json j{{"source", opt.src.name()},
               {"y", std::vector<double>(y.entries().begin(), y.entries().end())},
               {"x", std::vector<double>(x.entries().begin(), x.entries().end())},
               {"probabilities", probs},
               {"sqrt_readout", readout},
               {"residual", res}};
        if (!opt.src.label.empty()) {
            j["equations"] = equations_for(FamilyLabel::parse(opt.src.label), y);
        }
        out << j.dump(2) << '\n';
        return;
    }
    out << "system: " << opt.src.name() << '\n';
    if (!opt.src.label.empty()) {
        for (const auto &eq : equations_for(FamilyLabel::parse(opt.src.label), y)) {
            out << "  " << eq << '\n';
        }
    }
    out << "x = " << vector_text(x.entries()) << '\n';
    out << "probabilities |x_i|^2 = " << vector_text(probs) << '\n';
    out << "sqrt readout (signs lost) = " << vector_text(readout) << '\n';
    out << "residual max|Ax - y| = " << format_number(res) << '\n';
}

// ---- run -------------------------------------------------------------------

struct RunOptions {
    Source src;
    std::size_t basis = 0;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    double noise = 0.0;
    std::size_t max_gates = kDefaultMaxGates;
    std::string output = "table";
};

ShotTable shots_for(const Source &src, std::size_t basis, std::uint64_t shots, std::uint64_t seed, double noise,
                    std::size_t max_gates) {
    auto prepared = prepare(src, max_gates);
    auto state = run(prepared.synthesis.circuit, basis);
    if (noise > 0.0) {
        auto probs = diagonal(noisy_solution(state, noise));
        return sample_distribution(probs, state.n_qubits(), shots, seed);
    }
    return sample(state, shots, seed);
}

void print_percent_header(std::ostream &out) {
    out << std::left << std::setw(10) << "circuit";
    for (std::size_t i = 0; i < 4; ++i) {
        auto o = outcome_label(i, 2);
        out << std::setw(12) << (o + "/" + padded(o));
    }
    out << '\n';
}

void print_percent_row(std::ostream &out, const std::string &name, const ShotTable &t) {
    out << std::left << std::setw(10) << name;
    for (const auto &[outcome, n] : t.counts) {
        out << std::setw(12) << (percent(t.frequency(outcome)) + "%");
    }
    out << '\n';
}

void cmd_run(const RunOptions &opt, std::ostream &out) {
    require_source(opt.src);
    auto table = shots_for(opt.src, opt.basis, opt.shots, opt.seed, opt.noise, opt.max_gates);
    const auto name = opt.src.name();
    if (opt.output == "json") {
        auto j = to_json(name, table);
        j["noise"] = opt.noise;
        out << j.dump(2) << '\n';
    } else if (opt.output == "csv") {
        out << "circuit";
        for (const auto &[outcome, n] : table.counts) {
            out << ',' << padded(outcome);
        }
        out << '\n' << name;
        for (const auto &[outcome, n] : table.counts) {
            out << ',' << percent(table.frequency(outcome));
        }
        out << '\n';
    } else {
        out << "shots=" << table.shots << " seed=" << table.seed << " noise=" << format_number(opt.noise) << '\n';
        print_percent_header(out);
        print_percent_row(out, name, table);
    }
}

// ---- table1 ----------------------------------------------------------------

struct Table1Options {
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    std::string output = "csv";
};

void cmd_table1(const Table1Options &opt, std::ostream &out) {
    const auto &rows = published_table1();
    std::vector<ShotTable> tables;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        tables.push_back(shots_for(Source{rows[r].label, {}}, 0, opt.shots, opt.seed + r, 0.0, kDefaultMaxGates));
    }
    if (opt.output == "json") {
        json j = json::array();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto row = to_json(rows[r].label, tables[r]);
            row["published_percent"] = rows[r].percent;
            j.push_back(std::move(row));
        }
        out << j.dump(2) << '\n';
        return;
    }
    if (opt.output == "table") {
        out << "shots=" << opt.shots << " seed=" << opt.seed << " (row r uses seed+r)\n";
        print_percent_header(out);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            print_percent_row(out, rows[r].label, tables[r]);
        }
        return;
    }
    out << "circuit";
    for (const char *prefix : {"sim_", "paper_"}) {
        for (std::size_t i = 0; i < 4; ++i) {
            out << ',' << prefix << padded(outcome_label(i, 2));
        }
    }
    out << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << rows[r].label;
        for (const auto &[outcome, n] : tables[r].counts) {
            out << ',' << percent(tables[r].frequency(outcome));
        }
        for (double p : rows[r].percent) {
            out << ',' << format_number(p);
        }
        out << '\n';
    }
}

// ---- tomo ------------------------------------------------------------------

struct TomoOptions {
    Source src;
    std::size_t basis = 0;
    bool analytic = false;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    double noise = 0.0;
    std::string convention = "overlap";
    std::string output = "table";
};

void cmd_tomo(const TomoOptions &opt, std::ostream &out) {
    require_source(opt.src);
    auto prepared = prepare(opt.src, kDefaultMaxGates);
    auto ideal = solve(prepared.a, RealVector::basis(4, opt.basis));
    auto target = QuantumState::from_real(ideal.entries());
    auto prepared_state = run(prepared.synthesis.circuit, opt.basis);
    auto rho = noisy_solution(prepared_state, opt.noise);
    auto mode = opt.analytic ? TomographyMode::analytic() : TomographyMode::sampled(opt.shots, opt.seed);
    auto reconstructed = reconstruct(pauli_expectations(rho, mode));
    const auto convention = opt.convention == "sqrt" ? FidelityConvention::Sqrt : FidelityConvention::Overlap;
    const double f = fidelity(reconstructed, target, convention);

    if (opt.output == "json") {
        json j{{"source", opt.src.name()},
               {"mode", opt.analytic ? "analytic" : "sampled"},
               {"noise", opt.noise},
               {"convention", opt.convention},
               {"fidelity", f},
               {"ideal", to_json(density_from_state(target))},
               {"rho", to_json(reconstructed)}};
        if (!opt.analytic) {
            j["shots"] = opt.shots;
            j["seed"] = opt.seed;
        }
        out << j.dump(2) << '\n';
        return;
    }
    if (opt.output == "csv") {
        out << density_csv(reconstructed);
        return;
    }
    out << "system: " << opt.src.name() << "  mode: " << (opt.analytic ? "analytic" : "sampled");
    if (!opt.analytic) {
        out << " shots=" << opt.shots << " seed=" << opt.seed;
    }
    out << "  noise p=" << format_number(opt.noise) << '\n';
    out << "reconstructed rho (re):\n";
    for (std::size_t r = 0; r < 4; ++r) {
        out << " ";
        for (std::size_t c = 0; c < 4; ++c) {
            out << ' ' << std::showpos << std::fixed << std::setprecision(4) << reconstructed(r, c).real();
        }
        out << std::noshowpos << '\n';
    }
    out << "fidelity (" << opt.convention << "): " << std::fixed << std::setprecision(6) << f << '\n';
}

// ---- synth / qasm ----------------------------------------------------------

struct SynthOptions {
    Source src;
    bool all = false;
    std::size_t max_gates = kDefaultMaxGates;
    std::string output = "json";
};

void cmd_synth(const SynthOptions &opt, std::ostream &out) {
    if (opt.all) {
        json j = json::array();
        for (const auto &[label, result] : synthesize_family(opt.max_gates)) {
            if (opt.output == "qasm") {
                out << "// " << label.name() << '\n' << to_qasm(result.circuit);
            } else {
                j.push_back(to_json(label.name(), result));
            }
        }
        if (opt.output != "qasm") {
            out << j.dump(2) << '\n';
        }
        return;
    }
    require_source(opt.src);
    auto prepared = prepare(opt.src, opt.max_gates);
    if (opt.output == "qasm") {
        out << to_qasm(prepared.synthesis.circuit);
    } else {
        out << to_json(opt.src.name(), prepared.synthesis).dump(2) << '\n';
    }
}

// ---- grover ----------------------------------------------------------------

struct GroverOptions {
    std::size_t qubits = 2;
    std::vector<std::size_t> marked;
    std::optional<std::size_t> iterations;
};

void cmd_grover(const GroverOptions &opt, std::ostream &out) {
    auto g = geometry(std::size_t{1} << opt.qubits, opt.marked.size());
    const auto k = opt.iterations.value_or(optimal_iterations(g));
    auto circuit = build_grover_circuit(opt.qubits, opt.marked, k);
    const double simulated = marked_probability(run(circuit, 0), opt.marked);
    json j{{"n", opt.qubits},
           {"marked", opt.marked},
           {"k", k},
           {"theta", g.theta},
           {"predicted", success_probability(g, k)},
           {"simulated", simulated}};
    out << j.dump(2) << '\n';
}

}  // namespace

const std::array<Table1Row, 8> &published_table1() {
    static const std::array<Table1Row, 8> rows{{
        {"A_1324", {21.875, 24.805, 27.051, 26.27}},
        {"A_2413", {24.023, 25.781, 23.926, 26.27}},
        {"A_3124", {24.414, 24.609, 25.684, 25.293}},
        {"A_4213", {24.316, 24.121, 26.563, 25.0}},
        {"B_1342", {24.707, 24.832, 24.219, 23.242}},
        {"B_2413", {24.902, 26.66, 23.047, 25.391}},
        {"B_3142", {24.805, 25.977, 24.707, 24.512}},
        {"B_4213", {26.758, 25.098, 25.195, 22.949}},
    }};
    return rows;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Solve +-1/2 orthogonal linear systems through 2-qubit circuits", "qlinsys"};
    app.require_subcommand(1);
    const std::vector<std::string> outputs_text{"table", "json"};

    FamilyListOptions family_opt;
    auto *family = app.add_subcommand("family", "browse the 48 coefficient matrices");
    family->require_subcommand(1);
    auto *family_list = family->add_subcommand("list", "list systems as LABEL<TAB>subset<TAB>matrix");
    family_list->add_option("--class", family_opt.class_filter, "A or B")->check(CLI::IsMember({"A", "B"}));
    family_list->add_option("--output", family_opt.output)->check(CLI::IsMember(outputs_text));

    SolveOptions solve_opt;
    auto *solve_cmd = app.add_subcommand("solve", "solve A x = y with x = A^T y");
    add_source_options(*solve_cmd, solve_opt.src);
    auto *y_opt = solve_cmd->add_option("--y", solve_opt.y, "comma list or CSV file; default e1");
    solve_cmd->add_option("--basis", solve_opt.basis, "use y = e_(basis+1)")->excludes(y_opt);
    solve_cmd->add_option("--output", solve_opt.output)->check(CLI::IsMember(outputs_text));

    RunOptions run_opt;
    auto *run_cmd = app.add_subcommand("run", "synthesize, simulate and sample one circuit");
    add_source_options(*run_cmd, run_opt.src);
    run_cmd->add_option("--basis", run_opt.basis, "initial basis state index")->check(CLI::Range(0, 3));
    run_cmd->add_option("--shots", run_opt.shots)->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", run_opt.seed);
    run_cmd->add_option("--noise", run_opt.noise, "global depolarizing probability")->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--max-gates", run_opt.max_gates)->check(CLI::PositiveNumber);
    run_cmd->add_option("--output", run_opt.output)->check(CLI::IsMember({"table", "json", "csv"}));

    Table1Options table1_opt;
    auto *table1 = app.add_subcommand("table1", "sample the eight published circuits");
    table1->add_option("--shots", table1_opt.shots)->check(CLI::PositiveNumber);
    table1->add_option("--seed", table1_opt.seed);
    table1->add_option("--output", table1_opt.output)->check(CLI::IsMember({"csv", "table", "json"}));

    TomoOptions tomo_opt;
    auto *tomo = app.add_subcommand("tomo", "Pauli tomography of the solution state");
    add_source_options(*tomo, tomo_opt.src);
    tomo->add_option("--basis", tomo_opt.basis)->check(CLI::Range(0, 3));
    auto *analytic = tomo->add_flag("--analytic", tomo_opt.analytic, "exact expectations instead of shots");
    tomo->add_option("--shots", tomo_opt.shots)->check(CLI::PositiveNumber)->excludes(analytic);
    tomo->add_option("--seed", tomo_opt.seed);
    tomo->add_option("--noise", tomo_opt.noise)->check(CLI::Range(0.0, 1.0));
    tomo->add_option("--convention", tomo_opt.convention)->check(CLI::IsMember({"overlap", "sqrt"}));
    tomo->add_option("--output", tomo_opt.output)->check(CLI::IsMember({"table", "json", "csv"}));

    SynthOptions synth_opt;
    auto *synth = app.add_subcommand("synth", "find a shortest circuit for U = A^T");
    add_source_options(*synth, synth_opt.src);
    synth->add_flag("--all", synth_opt.all, "all 48 family labels");
    synth->add_option("--max-gates", synth_opt.max_gates)->check(CLI::PositiveNumber);
    synth->add_option("--output", synth_opt.output)->check(CLI::IsMember({"json", "qasm"}));

    Source qasm_src;
    std::size_t qasm_max_gates = kDefaultMaxGates;
    auto *qasm = app.add_subcommand("qasm", "export the synthesized circuit as OpenQASM 2.0");
    add_source_options(*qasm, qasm_src);
    qasm->add_option("--max-gates", qasm_max_gates)->check(CLI::PositiveNumber);

    GroverOptions grover_opt;
    auto *grover = app.add_subcommand("grover", "amplitude amplification demo");
    grover->add_option("--qubits", grover_opt.qubits)->check(CLI::Range(1, 10));
    grover->add_option("--marked", grover_opt.marked, "marked basis indices")->required()->delimiter(',');
    grover->add_option("--k", grover_opt.iterations, "iterations; default optimal");

    std::vector<const char *> argv{"qlinsys"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (family_list->parsed()) {
            cmd_family_list(family_opt, out);
        } else if (solve_cmd->parsed()) {
            cmd_solve(solve_opt, out);
        } else if (run_cmd->parsed()) {
            cmd_run(run_opt, out);
        } else if (table1->parsed()) {
            cmd_table1(table1_opt, out);
        } else if (tomo->parsed()) {
            cmd_tomo(tomo_opt, out);
        } else if (synth->parsed()) {
            cmd_synth(synth_opt, out);
        } else if (qasm->parsed()) {
            require_source(qasm_src);
            out << to_qasm(prepare(qasm_src, qasm_max_gates).synthesis.circuit);
        } else if (grover->parsed()) {
            cmd_grover(grover_opt, out);
        }
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::NotFound ? kSynthesisFailed : kValidation;
    }
    return kOk;
}

}  // namespace qlinsys::cli
