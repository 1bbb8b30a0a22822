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

#ifndef REVLATTICE_FORMATS_H
#define REVLATTICE_FORMATS_H

#include <string>

#include "revlattice/circuit.h"
#include "revlattice/gate.h"

namespace revlattice {

// Truth-table text (.rgt):
//
//     # comment
//     bits 2
//     00 -> 01
//     ...            (2^N rows, any order)
//
// or a single line `perm N: i0 i1 ...` listing outputs as integers.
Gate parse_rgt(const std::string &text);
/// Canonical arrow form, rows in input order.
std::string write_rgt(const Gate &g, const std::string &comment = "");

// Circuit text (.rgc), wires numbered from 1:
//
//     width 5
//     data 4
//     ancilla 5 = 0
//     deftable MYGATE
//     00 -> 01
//     ...
//     gate FREDKIN 1 2 5
Circuit parse_rgc(const std::string &text);
std::string write_rgc(const Circuit &c, const std::string &comment = "");

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace revlattice

#endif
