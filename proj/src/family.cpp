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

#include "qlinsys/family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qlinsys/error.hpp"

namespace qlinsys {

namespace {

RealVector half(std::array<double, 4> signs) {
    return RealVector({signs[0] / 2, signs[1] / 2, signs[2] / 2, signs[3] / 2});
}

std::string format_constant(double c) {
    if (c == std::round(c)) {
        return std::to_string(static_cast<long long>(std::round(c)));
    }
    std::ostringstream os;
    os.precision(12);
    os << c;
    return os.str();
}

}  // namespace

char class_tag(ColumnClass c) { return c == ColumnClass::A ? 'A' : 'B'; }

std::array<RealVector, 4> base_columns(ColumnClass c) {
    if (c == ColumnClass::A) {
        return {half({1, 1, 1, 1}), half({1, -1, -1, 1}), half({1, -1, 1, -1}), half({1, 1, -1, -1})};
    }
    return {half({1, 1, 1, -1}), half({1, 1, -1, 1}), half({1, -1, 1, 1}), half({1, -1, -1, -1})};
}

std::string FamilyLabel::name() const {
    std::string s(1, class_tag(column_class));
    s += '_';
    for (int p : perm) {
        s += static_cast<char>('0' + p);
    }
    return s;
}

std::string FamilyLabel::subset() const {
    return std::string(1, class_tag(column_class)) + static_cast<char>('0' + perm[0]);
}

FamilyLabel FamilyLabel::parse(std::string_view text) {
    auto fail = [&] { return Error(ErrorCode::ParseError, "bad family label '" + std::string(text) + "'"); };
    if (text.size() != 5 && text.size() != 6) {
        throw fail();
    }
    FamilyLabel label;
    switch (text[0]) {
        case 'A':
        case 'a':
            label.column_class = ColumnClass::A;
            break;
        case 'B':
        case 'b':
            label.column_class = ColumnClass::B;
            break;
        default:
            throw fail();
    }
    auto digits = text.substr(1);
    if (digits.size() == 5) {
        if (digits[0] != '_') {
            throw fail();
        }
        digits = digits.substr(1);
    }
    std::array<bool, 4> seen{};
    for (std::size_t i = 0; i < 4; ++i) {
        int d = digits[i] - '0';
        if (d < 1 || d > 4 || seen[d - 1]) {
            throw fail();
        }
        seen[d - 1] = true;
        label.perm[i] = d;
    }
    return label;
}

RealMatrix matrix_for(const FamilyLabel &label) {
    auto base = base_columns(label.column_class);
    std::array<RealVector, 4> cols;
    for (std::size_t j = 0; j < 4; ++j) {
        cols[j] = base[label.perm[j] - 1];
    }
    return RealMatrix::from_columns(cols);
}

std::vector<FamilyLabel> labels_of(ColumnClass c) {
    std::vector<FamilyLabel> out;
    std::array<int, 4> perm{1, 2, 3, 4};
    do {
        out.push_back(FamilyLabel{c, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<LinearSystemSpec> enumerate_family() {
    std::vector<LinearSystemSpec> out;
    out.reserve(48);
    for (auto c : {ColumnClass::A, ColumnClass::B}) {
        for (const auto &label : labels_of(c)) {
            out.push_back({label, matrix_for(label), RealVector::basis(4, 0), equations_for(label)});
        }
    }
    return out;
}

std::vector<std::string> equations_for(const FamilyLabel &label) {
    return equations_for(label, RealVector::basis(4, 0));
}

std::vector<std::string> equations_for(const FamilyLabel &label, const RealVector &y) {
    auto m = matrix_for(label);
    if (y.dim() != m.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "y must have 4 entries");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::string eq;
        for (std::size_t j = 0; j < m.dim(); ++j) {
            bool negative = m(i, j) < 0;
            std::string var = "x" + std::to_string(j + 1);
            if (j == 0) {
                eq += negative ? "-" + var : var;
            } else {
                eq += negative ? " - " : " + ";
                eq += var;
            }
        }
        eq += " = " + format_constant(2 * y[i]);
        out.push_back(std::move(eq));
    }
    return out;
}

}  // namespace qlinsys
