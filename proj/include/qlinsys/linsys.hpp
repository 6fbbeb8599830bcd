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

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlinsys {

/// Dense real vector of finite entries.
class RealVector {
   public:
    RealVector() = default;
    explicit RealVector(std::vector<double> entries);

    static RealVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    std::span<const double> entries() const noexcept { return entries_; }
    double norm() const;

    bool operator==(const RealVector &) const = default;

   private:
    std::vector<double> entries_;
};

/// Square real matrix, row-major.
class RealMatrix {
   public:
    RealMatrix() = default;
    /// Throws InvalidMatrix unless `entries.size() == dim * dim`, dim >= 1 and all entries finite.
    RealMatrix(std::size_t dim, std::vector<double> entries);

    static RealMatrix identity(std::size_t dim);
    static RealMatrix from_rows(const std::vector<std::vector<double>> &rows);
    static RealMatrix from_columns(std::span<const RealVector> columns);

    std::size_t dim() const noexcept { return dim_; }
    double operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    std::span<const double> entries() const noexcept { return entries_; }

    RealVector row(std::size_t i) const;
    RealVector column(std::size_t j) const;
    RealMatrix transpose() const;

    bool operator==(const RealMatrix &) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<double> entries_;
};

RealMatrix operator*(const RealMatrix &a, const RealMatrix &b);
RealVector operator*(const RealMatrix &a, const RealVector &x);

/// Largest absolute entry of a - b. Throws DimensionMismatch.
double max_abs_diff(const RealMatrix &a, const RealMatrix &b);
double max_abs_diff(const RealVector &a, const RealVector &b);

inline constexpr double kExactTol = 1e-10;

/// Every column has unit Euclidean norm: |sum_i A_ij^2 - 1| <= tol.
bool check_column_normalization(const RealMatrix &a, double tol);

/// max |A^T A - I| <= tol.
bool check_orthonormal_columns(const RealMatrix &a, double tol);

/// U with U A = I, i.e. A^T. Throws NotOrthonormal when A is not orthonormal-columned at 1e-10.
RealMatrix inverse_operator(const RealMatrix &a);

/// x = A^T y. Throws NotOrthonormal, NotNormalized (|‖y‖ - 1| > 1e-10) or DimensionMismatch.
RealVector solve(const RealMatrix &a, const RealVector &y);

/// max |A x - y|.
double residual(const RealMatrix &a, const RealVector &x, const RealVector &y);

// CSV: one row per line, comma-separated decimal literals. Blank lines and
// lines starting with '#' are skipped.
RealMatrix read_matrix_csv(std::istream &in);
RealMatrix read_matrix_csv_file(const std::string &path);
RealVector parse_vector_csv(std::string_view text);

}  // namespace qlinsys
