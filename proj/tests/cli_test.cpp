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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "qlinsys/family.hpp"
#include "qlinsys/linsys.hpp"

using namespace qlinsys;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return std::string(QLINSYS_TEST_DATA_DIR) + "/golden/" + name; }

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t lines(const std::string &s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(cli_family, list_counts_and_filter) {
    auto all = invoke({"family", "list"});
    EXPECT_EQ(all.code, 0);
    EXPECT_EQ(lines(all.out), 48u);
    EXPECT_EQ(all.out, read_file(data("family_list.tsv")));
    EXPECT_EQ(all.out.substr(0, all.out.find('\n')),
              "A_1234\tA1\t0.5,0.5,0.5,0.5,0.5,-0.5,-0.5,0.5,0.5,-0.5,0.5,-0.5,0.5,0.5,-0.5,-0.5");

    auto a = invoke({"family", "list", "--class", "A"});
    EXPECT_EQ(lines(a.out), 24u);
    EXPECT_EQ(a.out.find("B_"), std::string::npos);

    auto j = json::parse(invoke({"family", "list", "--class", "B", "--output", "json"}).out);
    ASSERT_EQ(j.size(), 24u);
    EXPECT_EQ(j[0]["label"], "B_1234");
    EXPECT_EQ(j[0]["equations"].size(), 4u);
}

TEST(cli_family, bad_class_is_usage_error) {
    EXPECT_EQ(invoke({"family", "list", "--class", "C"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"family"}).code, cli::kUsage);
    EXPECT_EQ(invoke({}).code, cli::kUsage);
    EXPECT_EQ(invoke({"--help"}).code, cli::kOk);
}

TEST(cli_solve, worked_example) {
    auto r = invoke({"solve", "--label", "A_1234"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, read_file(data("solve_A_1234.txt")));
    EXPECT_NE(r.out.find("x = [0.5, 0.5, 0.5, 0.5]"), std::string::npos);
    EXPECT_NE(r.out.find("x1 - x2 - x3 + x4 = 0"), std::string::npos);
}

TEST(cli_solve, matrix_file_and_y) {
    auto r = invoke({"solve", "--matrix", data("identity.csv"), "--y", "0,1,0,0", "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["x"], json::array({0.0, 1.0, 0.0, 0.0}));
    EXPECT_EQ(j["residual"], 0.0);

    auto signed_solution = json::parse(invoke({"solve", "--label", "A_1234", "--basis", "1", "--output", "json"}).out);
    EXPECT_EQ(signed_solution["x"], json::array({0.5, -0.5, -0.5, 0.5}));
    EXPECT_EQ(signed_solution["sqrt_readout"], json::array({0.5, 0.5, 0.5, 0.5}));
}

TEST(cli_solve, validation_errors_exit_3) {
    auto r = invoke({"solve", "--matrix", data("nonorthogonal.csv")});
    EXPECT_EQ(r.code, cli::kValidation);
    EXPECT_NE(r.err.find("NotOrthonormal"), std::string::npos);

    auto y = invoke({"solve", "--label", "A_1234", "--y", "1,1,0,0"});
    EXPECT_EQ(y.code, cli::kValidation);
    EXPECT_NE(y.err.find("NotNormalized"), std::string::npos);

    EXPECT_EQ(invoke({"solve", "--label", "Q_1234"}).code, cli::kValidation);
    EXPECT_EQ(invoke({"solve"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"solve", "--label", "A_1234", "--matrix", data("identity.csv")}).code, cli::kUsage);
}

TEST(cli_run, table1_row_a1324) {
    auto j = json::parse(invoke({"run", "--label", "A_1324", "--shots", "1024", "--seed", "7", "--output", "json"}).out);
    EXPECT_EQ(j["shots"], 1024);
    EXPECT_EQ(j["seed"], 7);
    for (const auto &[k, f] : j["frequencies"].items()) {
        EXPECT_GE(f.get<double>(), 0.20) << k;
        EXPECT_LE(f.get<double>(), 0.30) << k;
    }
}

TEST(cli_run, small_shot_count) {
    auto j = json::parse(invoke({"run", "--label", "A_1234", "--shots", "4", "--seed", "0", "--output", "json"}).out);
    std::uint64_t total = 0;
    for (const auto &[k, n] : j["counts"].items()) {
        total += n.get<std::uint64_t>();
    }
    EXPECT_EQ(total, 4u);
}

TEST(cli_run, deterministic_and_csv_layout) {
    auto a = invoke({"run", "--label", "B_2413", "--output", "csv"});
    auto b = invoke({"run", "--label", "B_2413", "--output", "csv"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("circuit,0000,0001,0010,0011\nB_2413,", 0), 0u);
}

TEST(cli_run, frequencies_converge_to_solution_probabilities) {
    for (const auto &spec : enumerate_family()) {
        auto x = solve(spec.matrix, spec.y);
        auto j = json::parse(
            invoke({"run", "--label", spec.label.name(), "--shots", "100000", "--output", "json"}).out);
        for (std::size_t i = 0; i < 4; ++i) {
            const std::string outcome = std::string(1, "0011"[i]) + "0101"[i];
            EXPECT_NEAR(j["frequencies"][outcome].get<double>(), x[i] * x[i], 0.01) << spec.label.name();
        }
    }
}

TEST(cli_run, noisy_basis_state_leaks_mass) {
    // |00> on identity with p = 0.4 puts 0.1 on each other outcome.
    auto j = json::parse(invoke({"run", "--matrix", data("identity.csv"), "--noise", "0.4", "--shots", "100000",
                              "--output", "json"})
                             .out);
    EXPECT_EQ(j["noise"], 0.4);
    EXPECT_NEAR(j["frequencies"]["00"].get<double>(), 0.7, 0.01);
    EXPECT_NEAR(j["frequencies"]["11"].get<double>(), 0.1, 0.01);
    EXPECT_EQ(invoke({"run", "--label", "A_1234", "--noise", "1.5"}).code, cli::kUsage);
}

TEST(cli_table1, default_output_is_pinned) {
    auto r = invoke({"table1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, read_file(data("table1_default.csv")));
    EXPECT_EQ(lines(r.out), 9u);
}

TEST(cli_table1, frequencies_within_binomial_band_and_chi_square) {
    auto j = json::parse(invoke({"table1", "--output", "json"}).out);
    ASSERT_EQ(j.size(), 8u);
    const auto &published = cli::published_table1();
    for (std::size_t r = 0; r < 8; ++r) {
        EXPECT_EQ(j[r]["label"], published[r].label);
        double chi2 = 0;
        for (const auto &[k, n] : j[r]["counts"].items()) {
            const double f = n.get<double>() / 1024.0;
            EXPECT_NEAR(f, 0.25, 0.0406) << published[r].label << " " << k;
            chi2 += (n.get<double>() - 256.0) * (n.get<double>() - 256.0) / 256.0;
        }
        EXPECT_GT(oracle::chi_square_3dof_pvalue(chi2), 0.01) << published[r].label;
    }
}

TEST(cli_tomo, fidelity_reports) {
    auto pure = json::parse(invoke({"tomo", "--label", "A_1234", "--analytic", "--output", "json"}).out);
    EXPECT_NEAR(pure["fidelity"].get<double>(), 1.0, 1e-12);

    auto noisy = invoke({"tomo", "--label", "A_1234", "--analytic", "--noise", "0.016267"});
    EXPECT_NE(noisy.out.find("fidelity (overlap): 0.987800"), std::string::npos) << noisy.out;

    auto sampled =
        json::parse(invoke({"tomo", "--label", "A_1234", "--shots", "8192", "--seed", "1", "--output", "json"}).out);
    EXPECT_GE(sampled["fidelity"].get<double>(), 0.99);
    EXPECT_EQ(sampled["rho"]["dim"], 4);

    auto root = json::parse(invoke({"tomo", "--label", "A_1234", "--analytic", "--noise", "0.016267", "--convention",
                                 "sqrt", "--output", "json"})
                                .out);
    EXPECT_NEAR(root["fidelity"].get<double>(), std::sqrt(1 - 0.75 * 0.016267), 1e-12);

    auto csv = invoke({"tomo", "--label", "A_1234", "--analytic", "--output", "csv"});
    EXPECT_EQ(lines(csv.out), 17u);
}

TEST(cli_synth, all_and_failures) {
    auto j = json::parse(invoke({"synth", "--all"}).out);
    ASSERT_EQ(j.size(), 48u);
    for (const auto &entry : j) {
        EXPECT_LE(entry["max_deviation"].get<double>(), 1e-10);
    }
    auto fail = invoke({"synth", "--label", "A_1234", "--max-gates", "3"});
    EXPECT_EQ(fail.code, cli::kSynthesisFailed);
    EXPECT_NE(fail.err.find("NotFound"), std::string::npos);
    EXPECT_EQ(invoke({"run", "--label", "A_1432", "--max-gates", "2"}).code, cli::kSynthesisFailed);
}

TEST(cli_qasm, matches_golden) {
    EXPECT_EQ(invoke({"qasm", "--label", "A_1234"}).out, read_file(data("A_1234.qasm")));
    EXPECT_EQ(invoke({"synth", "--label", "A_1342", "--output", "qasm"}).out, read_file(data("A_1342.qasm")));
}

TEST(cli_grover, reports_prediction_and_simulation) {
    auto j = json::parse(invoke({"grover", "--qubits", "2", "--marked", "3"}).out);
    EXPECT_EQ(j["k"], 1);
    EXPECT_NEAR(j["simulated"].get<double>(), 1.0, 1e-12);
    auto three = json::parse(invoke({"grover", "--qubits", "3", "--marked", "5", "--k", "2"}).out);
    EXPECT_NEAR(three["simulated"].get<double>(), three["predicted"].get<double>(), 1e-10);
    EXPECT_EQ(invoke({"grover", "--qubits", "2", "--marked", "7"}).code, cli::kValidation);
}
