// Copyright 2026 The revlattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REVLATTICE_ERROR_H
#define REVLATTICE_ERROR_H

#include <stdexcept>
#include <string>

namespace revlattice {

enum class ErrorCode {
    DuplicateRow,
    MissingRow,
    NotBijective,
    ArityMismatch,
    ArityTooLarge,
    WidthMismatch,
    AncillaNotRestored,
    AncillaInputDependent,
    AncillaConflict,
    NotInClass,
    Singular,
    BadParameter,
    ArityTooSmall,
    DegenerateClass,
    PreconditionViolated,
    TooLarge,
    NotOrthogonal,
    FlavorMismatch,
    ParseError,
    VerificationFailed,
};

const char *error_code_name(ErrorCode code);

class RevError : public std::runtime_error {
   public:
    RevError(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
    }
    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace revlattice

#endif
