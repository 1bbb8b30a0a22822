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

#include "revlattice/error.h"
#include "revlattice/word.h"

namespace revlattice {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateRow:
            return "DuplicateRow";
        case ErrorCode::MissingRow:
            return "MissingRow";
        case ErrorCode::NotBijective:
            return "NotBijective";
        case ErrorCode::ArityMismatch:
            return "ArityMismatch";
        case ErrorCode::ArityTooLarge:
            return "ArityTooLarge";
        case ErrorCode::WidthMismatch:
            return "WidthMismatch";
        case ErrorCode::AncillaNotRestored:
            return "AncillaNotRestored";
        case ErrorCode::AncillaInputDependent:
            return "AncillaInputDependent";
        case ErrorCode::AncillaConflict:
            return "AncillaConflict";
        case ErrorCode::NotInClass:
            return "NotInClass";
        case ErrorCode::Singular:
            return "Singular";
        case ErrorCode::BadParameter:
            return "BadParameter";
        case ErrorCode::ArityTooSmall:
            return "ArityTooSmall";
        case ErrorCode::DegenerateClass:
            return "DegenerateClass";
        case ErrorCode::PreconditionViolated:
            return "PreconditionViolated";
        case ErrorCode::TooLarge:
            return "TooLarge";
        case ErrorCode::NotOrthogonal:
            return "NotOrthogonal";
        case ErrorCode::FlavorMismatch:
            return "FlavorMismatch";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::VerificationFailed:
            return "VerificationFailed";
    }
    return "Unknown";
}

std::string to_bit_string(Word x, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; i++) {
        if (get_wire(x, n, i)) {
            s[i] = '1';
        }
    }
    return s;
}

Word parse_bit_string(std::string_view s) {
    if (s.empty() || s.size() > kMaxWordBits) {
        throw RevError(ErrorCode::ParseError, "bit string must have 1 to 64 characters");
    }
    Word x = 0;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw RevError(ErrorCode::ParseError, "bad bit character '" + std::string(1, c) + "'");
        }
        x = (x << 1) | (c == '1');
    }
    return x;
}

}  // namespace revlattice
