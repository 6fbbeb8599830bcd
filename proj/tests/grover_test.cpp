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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qlinsys/error.hpp"

using namespace qlinsys;

TEST(geometry, examples) {
    EXPECT_NEAR(geometry(4, 1).theta, std::numbers::pi / 6, 1e-15);
    EXPECT_NEAR(geometry(4, 4).theta, std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(geometry(8, 1).theta, std::asin(1 / std::sqrt(8.0)), 1e-15);
    EXPECT_NEAR(geometry(8, 1).theta, 0.361367, 1e-6);
}

TEST(geometry, invalid_counts) {
    EXPECT_THROW(geometry(6, 1), Error);
    EXPECT_THROW(geometry(0, 0), Error);
    EXPECT_THROW(geometry(4, 0), Error);
    EXPECT_THROW(geometry(4, 5), Error);
}

TEST(optimal_iterations, examples) {
    EXPECT_EQ(optimal_iterations(geometry(4, 1)), 1u);
    EXPECT_EQ(optimal_iterations(geometry(4, 4)), 0u);
    EXPECT_EQ(optimal_iterations(geometry(8, 1)), 2u);
}

TEST(optimal_iterations, is_a_local_maximum_and_scales_as_root_n) {
    std::size_t previous = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        const std::size_t items = std::size_t{1} << n;
        auto g = geometry(items, 1);
        const auto k = optimal_iterations(g);
        EXPECT_GE(k, previous);
        previous = k;
        EXPECT_LE(std::abs(static_cast<double>(k) - (std::numbers::pi / 4 * std::sqrt(double(items)) - 0.5)), 1.0)
            << items;
        EXPECT_GE(success_probability(g, k), success_probability(g, k + 1));
        if (k > 0) {
            EXPECT_GE(success_probability(g, k), success_probability(g, k - 1));
        }
    }
}

TEST(success_probability, examples) {
    EXPECT_NEAR(success_probability(geometry(4, 1), 1), 1.0, 1e-15);
    EXPECT_NEAR(success_probability(geometry(16, 3), 0), 3.0 / 16, 1e-15);
    EXPECT_NEAR(success_probability(geometry(8, 1), 2), std::pow(std::sin(5 * std::asin(1 / std::sqrt(8.0))), 2), 1e-15);
    EXPECT_NEAR(success_probability(geometry(8, 1), 2), 0.9453, 1e-4);
}

TEST(build_grover_circuit, examples) {
    auto two = run(build_grover_circuit(2, {3}, 1), 0);
    EXPECT_NEAR(marked_probability(two, {3}), 1.0, 1e-12);

    auto all = run(build_grover_circuit(2, {0, 1, 2, 3}, 0), 0);
    EXPECT_NEAR(marked_probability(all, {0, 1, 2, 3}), 1.0, 1e-12);

    auto three = run(build_grover_circuit(3, {5}, 2), 0);
    EXPECT_NEAR(marked_probability(three, {5}), success_probability(geometry(8, 1), 2), 1e-10);
}

TEST(build_grover_circuit, invalid_marked_sets) {
    EXPECT_THROW(build_grover_circuit(2, {}, 1), Error);
    EXPECT_THROW(build_grover_circuit(2, {4}, 1), Error);
    EXPECT_THROW(build_grover_circuit(2, {1, 1}, 1), Error);
    EXPECT_THROW(build_grover_circuit(0, {0}, 1), Error);
    EXPECT_THROW(build_grover_circuit(11, {0}, 1), Error);
}

TEST(build_grover_circuit, simulator_matches_closed_form) {
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        auto g = geometry(dim, 1);
        for (std::size_t mark = 0; mark < dim; ++mark) {
            for (std::size_t k = 0; k <= 4; ++k) {
                auto state = run(build_grover_circuit(n, {mark}, k), 0);
                EXPECT_NEAR(marked_probability(state, {mark}), success_probability(g, k), 1e-10)
                    << "n=" << n << " mark=" << mark << " k=" << k;
            }
        }
    }
}

TEST(build_grover_circuit, multi_marked_matches_closed_form) {
    const std::vector<std::size_t> marked{1, 6, 11};
    auto g = geometry(16, marked.size());
    for (std::size_t k = 0; k <= 4; ++k) {
        auto state = run(build_grover_circuit(4, marked, k), 0);
        EXPECT_NEAR(marked_probability(state, marked), success_probability(g, k), 1e-10);
    }
}

// The state stays in span{|alpha>, |beta>}: equal amplitudes on the marked
// states and equal amplitudes on the unmarked ones.
TEST(build_grover_circuit, two_dimensional_invariant_subspace) {
    const std::vector<std::size_t> marked{2, 5};
    for (std::size_t k = 0; k <= 5; ++k) {
        auto state = run(build_grover_circuit(3, marked, k), 0);
        const Complex on = state[marked[0]];
        const Complex off = state[0];
        for (std::size_t i = 0; i < 8; ++i) {
            const bool is_marked = i == 2 || i == 5;
            EXPECT_NEAR(std::abs(state[i] - (is_marked ? on : off)), 0.0, 1e-10) << "k=" << k << " i=" << i;
        }
    }
}
