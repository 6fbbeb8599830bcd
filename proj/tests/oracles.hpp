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

// Independent reference computations for tests. Nothing here calls into the
// library's solver or simulator paths.
#pragma once

#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace qlinsys::oracle {

using Rows = std::vector<std::vector<double>>;

/// Gaussian elimination with partial pivoting on a dense copy of A.
inline std::vector<double> gauss_solve(Rows a, std::vector<double> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                pivot = r;
            }
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            s -= a[i][c] * x[c];
        }
        x[i] = s / a[i][i];
    }
    return x;
}

inline Rows multiply(const Rows &a, const Rows &b) {
    const std::size_t n = a.size();
    Rows c(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

inline Rows transpose(const Rows &a) {
    Rows t(a.size(), std::vector<double>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            t[j][i] = a[i][j];
        }
    }
    return t;
}

/// Random orthogonal matrix via modified Gram-Schmidt on Gaussian columns.
inline Rows random_orthogonal(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<std::vector<double>> cols(n, std::vector<double>(n));
    for (auto &c : cols) {
        for (auto &v : c) {
            v = normal(rng);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            double d = 0;
            for (std::size_t i = 0; i < n; ++i) {
                d += cols[j][i] * cols[k][i];
            }
            for (std::size_t i = 0; i < n; ++i) {
                cols[j][i] -= d * cols[k][i];
            }
        }
        double norm = 0;
        for (double v : cols[j]) {
            norm += v * v;
        }
        norm = std::sqrt(norm);
        for (auto &v : cols[j]) {
            v /= norm;
        }
    }
    return transpose(cols);
}

inline std::vector<double> random_unit(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    std::vector<double> v(n);
    double norm = 0;
    for (auto &x : v) {
        x = normal(rng);
        norm += x * x;
    }
    for (auto &x : v) {
        x /= std::sqrt(norm);
    }
    return v;
}

/// The 2x2 Hadamard tensored with itself, entry by entry.
inline Rows hadamard_tensor_square() {
    const double h[2][2] = {{1, 1}, {1, -1}};
    Rows m(4, std::vector<double>(4));
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m[r][c] = 0.5 * h[r >> 1][c >> 1] * h[r & 1][c & 1];
        }
    }
    return m;
}

/// Upper tail of the chi-square distribution with 3 degrees of freedom.
inline double chi_square_3dof_pvalue(double x) {
    // Closed form: Q(3/2, x/2) = erfc(sqrt(x/2)) + sqrt(2x/pi) exp(-x/2).
    return std::erfc(std::sqrt(x / 2)) + std::sqrt(2 * x / M_PI) * std::exp(-x / 2);
}

}  // namespace qlinsys::oracle
