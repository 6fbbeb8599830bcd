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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qlinsys/linsys.hpp"

namespace qlinsys {

/// The two base-column classes of 4x4 orthogonal matrices with entries +-1/2.
enum class ColumnClass { A, B };

char class_tag(ColumnClass c);

/// Four mutually orthogonal unit columns, each with first entry +1/2.
/// A holds the columns of the worked example matrix; B the complementary
/// orthogonality class of {+-1/2}^4 vectors with positive first entry.
std::array<RealVector, 4> base_columns(ColumnClass c);

/// Identifies one family matrix, e.g. A_1342 = columns (psi1, psi3, psi4, psi2).
struct FamilyLabel {
    ColumnClass column_class = ColumnClass::A;
    std::array<int, 4> perm{1, 2, 3, 4};

    /// "A_1234"
    std::string name() const;
    /// "A1" .. "B4": class tag plus the fixed first column.
    std::string subset() const;

    /// Parses "A_1234" (also accepts "A1234"). Throws ParseError.
    static FamilyLabel parse(std::string_view text);

    bool operator==(const FamilyLabel &) const = default;
    auto operator<=>(const FamilyLabel &) const = default;
};

struct LinearSystemSpec {
    FamilyLabel label;
    RealMatrix matrix;
    RealVector y;
    std::vector<std::string> equations;
};

RealMatrix matrix_for(const FamilyLabel &label);

/// All 48 systems with y = e1, ordered A before B and by lexicographic
/// permutation within a class, so each run of six shares a subset.
std::vector<LinearSystemSpec> enumerate_family();

/// All 24 labels of one class in lexicographic permutation order.
std::vector<FamilyLabel> labels_of(ColumnClass c);

/// Renders row i of 2A as "x1 - x2 - x3 + x4 = c" with c = 2 y_i.
std::vector<std::string> equations_for(const FamilyLabel &label);
std::vector<std::string> equations_for(const FamilyLabel &label, const RealVector &y);

}  // namespace qlinsys
