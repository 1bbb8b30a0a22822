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

#ifndef REVLATTICE_NAMED_GATES_H
#define REVLATTICE_NAMED_GATES_H

#include "revlattice/gate.h"

namespace revlattice {

// Named gates. Wire lists put controls first and targets last.

Gate not_gate();
Gate notnot_gate();
/// (x, y) -> (x, y ^ x).
Gate cnot_gate();
/// (x, y, z) -> (x, y ^ x, z ^ x).
Gate cnotnot_gate();
/// (x, y, z) -> (x, y, z ^ xy).
Gate toffoli_gate();
/// Swaps y and z when x = 1.
Gate fredkin_gate();
Gate swap_gate();
/// Swaps z and w when x = y = 1.
Gate ccswap_gate();
/// C_k: 0^k <-> 1^k, everything else fixed. k >= 1.
Gate ck_gate(int k);
/// T_k (k even): complements x when |x| is odd.
Gate tk_gate(int k);
/// F_k (k even): complements x when |x| is even.
Gate fk_gate(int k);
/// The n-bit transposition exchanging y and z.
Gate transposition_gate(int n, Word y, Word z);

}  // namespace revlattice

#endif
