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

#include "qlinsys/linsys.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qlinsys/error.hpp"

namespace qlinsys {

namespace {

void require_finite(std::span<const double> values) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::InvalidMatrix, "non-finite entry");
        }
    }
}

std::string trim(std::string_view s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) {
        return {};
    }
    auto end = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(begin, end - begin + 1));
}

std::vector<double> parse_csv_line(std::string_view line) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (true) {
        auto comma = line.find(',', pos);
        auto field = trim(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos));
        if (field.empty()) {
            throw Error(ErrorCode::ParseError, "empty field in '" + std::string(line) + "'");
        }
        std::size_t used = 0;
        double value = 0;
        try {
            value = std::stod(field, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != field.size()) {
            throw Error(ErrorCode::ParseError, "not a number: '" + field + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

}  // namespace

RealVector::RealVector(std::vector<double> entries) : entries_(std::move(entries)) {
    require_finite(entries_);
}

RealVector RealVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
    }
    std::vector<double> e(dim, 0.0);
    e[index] = 1.0;
    return RealVector(std::move(e));
}

double RealVector::norm() const {
    double s = 0;
    for (double v : entries_) {
        s += v * v;
    }
    return std::sqrt(s);
}

RealMatrix::RealMatrix(std::size_t dim, std::vector<double> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw Error(ErrorCode::InvalidMatrix, "expected a non-empty square matrix");
    }
    require_finite(entries_);
}

RealMatrix RealMatrix::identity(std::size_t dim) {
    std::vector<double> e(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = 1.0;
    }
    return RealMatrix(dim, std::move(e));
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>> &rows) {
    std::vector<double> e;
    for (const auto &r : rows) {
        if (r.size() != rows.size()) {
            throw Error(ErrorCode::InvalidMatrix,
                        "row of length " + std::to_string(r.size()) + " in a " + std::to_string(rows.size()) +
                            "-row matrix");
        }
        e.insert(e.end(), r.begin(), r.end());
    }
    return RealMatrix(rows.size(), std::move(e));
}

RealMatrix RealMatrix::from_columns(std::span<const RealVector> columns) {
    std::size_t n = columns.size();
    std::vector<double> e(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].dim() != n) {
            throw Error(ErrorCode::InvalidMatrix, "column length does not match column count");
        }
        for (std::size_t i = 0; i < n; ++i) {
            e[i * n + j] = columns[j][i];
        }
    }
    return RealMatrix(n, std::move(e));
}

RealVector RealMatrix::row(std::size_t i) const {
    return RealVector(std::vector<double>(entries_.begin() + i * dim_, entries_.begin() + (i + 1) * dim_));
}

RealVector RealMatrix::column(std::size_t j) const {
    std::vector<double> c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        c[i] = (*this)(i, j);
    }
    return RealVector(std::move(c));
}

RealMatrix RealMatrix::transpose() const {
    std::vector<double> t(entries_.size());
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            t[j * dim_ + i] = (*this)(i, j);
        }
    }
    return RealMatrix(dim_, std::move(t));
}

RealMatrix operator*(const RealMatrix &a, const RealMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product of different sizes");
    }
    std::size_t n = a.dim();
    std::vector<double> c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                c[i * n + j] += a(i, k) * b(k, j);
            }
        }
    }
    return RealMatrix(n, std::move(c));
}

RealVector operator*(const RealMatrix &a, const RealVector &x) {
    if (a.dim() != x.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix of size " + std::to_string(a.dim()) + " times vector of size " + std::to_string(x.dim()));
    }
    std::vector<double> y(a.dim(), 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            y[i] += a(i, j) * x[j];
        }
    }
    return RealVector(std::move(y));
}

double max_abs_diff(const RealMatrix &a, const RealMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "matrices of different sizes");
    }
    double m = 0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

double max_abs_diff(const RealVector &a, const RealVector &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "vectors of different sizes");
    }
    double m = 0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

bool check_column_normalization(const RealMatrix &a, double tol) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
        double s = 0;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            s += a(i, j) * a(i, j);
        }
        if (std::abs(s - 1.0) > tol) {
            return false;
        }
    }
    return true;
}

bool check_orthonormal_columns(const RealMatrix &a, double tol) {
    return max_abs_diff(a.transpose() * a, RealMatrix::identity(a.dim())) <= tol;
}

RealMatrix inverse_operator(const RealMatrix &a) {
    if (!check_orthonormal_columns(a, kExactTol)) {
        throw Error(ErrorCode::NotOrthonormal, "columns of A are not orthonormal, so A^T A != I");
    }
    return a.transpose();
}

RealVector solve(const RealMatrix &a, const RealVector &y) {
    if (a.dim() != y.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "A and y have different sizes");
    }
    auto u = inverse_operator(a);
    if (std::abs(y.norm() - 1.0) > kExactTol) {
        throw Error(ErrorCode::NotNormalized, "y must be a unit vector, got norm " + std::to_string(y.norm()));
    }
    return u * y;
}

double residual(const RealMatrix &a, const RealVector &x, const RealVector &y) {
    if (a.dim() != x.dim() || a.dim() != y.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "A, x and y must share one dimension");
    }
    return max_abs_diff(a * x, y);
}

RealMatrix read_matrix_csv(std::istream &in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        rows.push_back(parse_csv_line(t));
    }
    if (rows.empty()) {
        throw Error(ErrorCode::ParseError, "matrix file has no rows");
    }
    return RealMatrix::from_rows(rows);
}

RealMatrix read_matrix_csv_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    return read_matrix_csv(in);
}

RealVector parse_vector_csv(std::string_view text) {
    auto t = trim(text);
    if (t.empty()) {
        throw Error(ErrorCode::ParseError, "empty vector");
    }
    return RealVector(parse_csv_line(t));
}

}  // namespace qlinsys
