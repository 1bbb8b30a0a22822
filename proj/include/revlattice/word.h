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

#ifndef REVLATTICE_WORD_H
#define REVLATTICE_WORD_H

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace revlattice {

/// An n-bit word packed into an integer.
///
/// Bit-order convention (used everywhere in the library and in every file
/// format): wires are numbered 0..n-1 in the API and 1..n in text files. The
/// leftmost character of a bit string is wire 0 and is the most significant
/// bit of the integer, so wire i lives at bit position n-1-i.
using Word = std::uint64_t;

inline constexpr int kMaxWordBits = 64;

inline int weight(Word x) {
    return std::popcount(x);
}

/// Integer inner product x.y = |x AND y|.
inline int dot(Word x, Word y) {
    return std::popcount(x & y);
}

inline Word low_mask(int n) {
    return n >= 64 ? ~Word{0} : (Word{1} << n) - 1;
}

inline Word complement(Word x, int n) {
    return x ^ low_mask(n);
}

/// The standard basis word e_i (0-based wire index).
inline Word basis_word(int n, int wire) {
    return Word{1} << (n - 1 - wire);
}

inline int get_wire(Word x, int n, int wire) {
    return static_cast<int>((x >> (n - 1 - wire)) & 1);
}

inline Word set_wire(Word x, int n, int wire, int bit) {
    Word m = basis_word(n, wire);
    return bit ? (x | m) : (x & ~m);
}

/// Renders x as an n-character string of '0'/'1', wire 0 first.
std::string to_bit_string(Word x, int n);

/// Parses a string of '0'/'1'. Throws RevError(ParseError) on other characters
/// or on strings longer than 64.
Word parse_bit_string(std::string_view s);

}  // namespace revlattice

#endif
