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

#ifndef REVLATTICE_PROPS_H
#define REVLATTICE_PROPS_H

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "revlattice/gate.h"

namespace revlattice {

struct PropertyResult {
    PropertyResult() = default;
    PropertyResult(std::string n, std::string s) : name(std::move(n)), statement(std::move(s)) {
    }

    std::string name;
    std::string statement;
    std::uint64_t checked = 0;
    std::uint64_t counterexamples = 0;
    std::string first_counterexample;

    bool passed() const {
        return counterexamples == 0 && checked > 0;
    }
};

/// Calls f on every reversible n-bit gate (n <= 3).
void for_each_gate(int n, const std::function<void(const Gate &)> &f);

/// No gate shifts weight by a fixed j != 0 mod k, 3 <= k <= 6.
PropertyResult prop_no_mod_shifter(int n);
/// Non-conservative gates do not preserve inner products mod 3.
PropertyResult prop_inner_product_mod3(int n);
/// Gates preserving inner products mod 2 are linear.
PropertyResult prop_orthogonal_is_linear(int n);
/// Nontrivial invertible matrices up to max_n do not preserve weight mod 3,
/// 5 or 6.
PropertyResult prop_linear_modulus_2_or_4(int max_n);
/// Affine maps: the mod-4 criterion agrees with direct evaluation.
PropertyResult prop_affine_mod4_criterion(int n);
/// Linear maps preserving weight mod 4 are orthogonal with columns of
/// weight 1 mod 4, and conversely.
PropertyResult prop_linear_mod4_columns(int n);
/// Characteristic vectors of orthogonal matrices have weight 0 mod 4.
PropertyResult prop_characteristic_vector(int n);
/// classify(G) == classify(dual(G)).
PropertyResult prop_dual_closed(int n);
/// Weight of an XOR by inclusion-exclusion over ANDs, up to max_t vectors
/// of width n <= 6.
PropertyResult prop_xor_inclusion_exclusion(int n, int max_t = 3);
/// The gcd form of the respecting number equals the largest k with all
/// weight deltas congruent mod k.
PropertyResult prop_respecting_gcd(int n);

/// Every property. Gate-level suites run at width min(n, 3); matrix-level
/// suites at width n (n <= 4).
std::vector<PropertyResult> run_property_suite(int n);

}  // namespace revlattice

#endif
