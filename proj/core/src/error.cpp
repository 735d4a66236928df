// Copyright 2026 The w52 Authors
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

#include "w52/error.hpp"

namespace w52 {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidLetter:
            return "InvalidLetter";
        case ErrorCode::IdentityExcluded:
            return "IdentityExcluded";
        case ErrorCode::BadLength:
            return "BadLength";
        case ErrorCode::NotMutuallyCommuting:
            return "NotMutuallyCommuting";
        case ErrorCode::NotClosed:
            return "NotClosed";
        case ErrorCode::DuplicateObservable:
            return "DuplicateObservable";
        case ErrorCode::LineNotInPlane:
            return "LineNotInPlane";
        case ErrorCode::TaxonomyViolation:
            return "TaxonomyViolation";
        case ErrorCode::UnknownId:
            return "UnknownId";
        case ErrorCode::NotAPentagram:
            return "NotAPentagram";
        case ErrorCode::NotAPentad:
            return "NotAPentad";
        case ErrorCode::ClosureNotIsotropicPlane:
            return "ClosureNotIsotropicPlane";
        case ErrorCode::TypeCountMismatch:
            return "TypeCountMismatch";
        case ErrorCode::MalformedInput:
            return "MalformedInput";
        case ErrorCode::Io:
            return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {
}

}  // namespace w52
