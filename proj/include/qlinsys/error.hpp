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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlinsys {

enum class ErrorCode {
    NotOrthonormal,
    NotNormalized,
    NotOrthogonal,
    DimensionMismatch,
    InvalidMatrix,
    InvalidTarget,
    NegativeProbability,
    InvalidProbability,
    NotFound,
    InvalidCounts,
    InvalidMarkedSet,
    UnsupportedGate,
    ParseError,
};

std::string_view error_name(ErrorCode code);

/// Exception carrying a stable error code. `what()` is prefixed with the
/// code name, e.g. "NotOrthonormal: columns 0 and 1 overlap".
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &detail);

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace qlinsys
