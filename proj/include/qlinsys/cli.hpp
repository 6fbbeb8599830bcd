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
#include <ostream>
#include <string>
#include <vector>

namespace qlinsys::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kValidation = 3,
    kSynthesisFailed = 4,
};

struct Table1Row {
    const char *label;
    std::array<double, 4> percent;
};

/// Published simulator percentages for outcomes 0000..0011, shown beside our
/// own samples. Display only.
const std::array<Table1Row, 8> &published_table1();

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qlinsys::cli
