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

#ifndef W52_ERROR_HPP
#define W52_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace w52 {

enum class ErrorCode {
    InvalidLetter,
    IdentityExcluded,
    BadLength,
    NotMutuallyCommuting,
    NotClosed,
    DuplicateObservable,
    LineNotInPlane,
    TaxonomyViolation,
    UnknownId,
    NotAPentagram,
    NotAPentad,
    ClosureNotIsotropicPlane,
    TypeCountMismatch,
    MalformedInput,
    Io,
};

std::string_view error_code_name(ErrorCode code);

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &detail);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace w52

#endif
