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

#ifndef REVLATTICE_SAMPLING_H
#define REVLATTICE_SAMPLING_H

#include <random>

#include "revlattice/gate.h"
#include "revlattice/lattice.h"

namespace revlattice {

/// Default seed for every randomized routine; overridable from the CLI.
inline constexpr std::uint64_t kDefaultSeed = 20260415;

/// A random n-bit member of c. Uniform for the permutation-defined classes
/// (ALL, FREDKIN, MOD(k), NOT, NOTNOT, TRIVIAL) and for CNOT; the isometry
/// classes use a random walk over their generators.
Gate random_member(const GateClass &c, int n, std::mt19937_64 &rng);

/// Uniform random invertible matrix with every column of odd weight.
Gf2Matrix random_odd_column_matrix(int n, std::mt19937_64 &rng);

/// Random walk of T_w (or F_4) applications and wire swaps.
AffineForm random_isometry(int n, int gate_width, bool complemented, std::mt19937_64 &rng);

}  // namespace revlattice

#endif
