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

#include "qlinsys/error.hpp"

namespace qlinsys {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotOrthonormal:
            return "NotOrthonormal";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::NotOrthogonal:
            return "NotOrthogonal";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::InvalidMatrix:
            return "InvalidMatrix";
        case ErrorCode::InvalidTarget:
            return "InvalidTarget";
        case ErrorCode::NegativeProbability:
            return "NegativeProbability";
        case ErrorCode::InvalidProbability:
            return "InvalidProbability";
        case ErrorCode::NotFound:
            return "NotFound";
        case ErrorCode::InvalidCounts:
            return "InvalidCounts";
        case ErrorCode::InvalidMarkedSet:
            return "InvalidMarkedSet";
        case ErrorCode::UnsupportedGate:
            return "UnsupportedGate";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace qlinsys
