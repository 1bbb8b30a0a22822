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

#ifndef REVLATTICE_SYNTH_H
#define REVLATTICE_SYNTH_H

#include <string>
#include <vector>

#include "revlattice/circuit.h"
#include "revlattice/gate.h"
#include "revlattice/lattice.h"

namespace revlattice {

struct SynthesisOptions {
    bool verify = true;
    /// Maximum ancilla count; negative means the class ceiling.
    int ancilla_budget = -1;
};

struct SynthesisRequest {
    Gate target;
    GateClass over;
    SynthesisOptions options;
};

/// Ancilla ceiling for circuits synthesized over c's canonical generators.
int ancilla_ceiling(const GateClass &c);

/// Dispatches to the class-specific synthesizer, verifies the result and
/// checks the ancilla ceiling. Throws NotInClass when the target is outside
/// the class.
Circuit synthesize(const SynthesisRequest &req);
Circuit synthesize(const Gate &target, const GateClass &over);

// Toffoli family.

/// Flips the last data wire iff the n control wires equal w. Controls are
/// data wires 0..n-1, the target is wire n.
Circuit multi_controlled_not(int n, Word w);
Circuit synth_all(const Gate &f);

// Fredkin family.

/// Swaps data wires n and n+1 iff the n control wires equal w.
Circuit multi_controlled_swap(int n, Word w);
Circuit synth_conservative(const Gate &f);
/// Controlled C_k: data wires (x, y_1..y_k), two ancillas initialized 0, 1.
/// For k = 2 the C_2 step is a NOTNOT followed by a SWAP.
Circuit build_cck(int k);
/// Fredkin from three C_k gates and k-2 ancillas initialized to 1.
Circuit fredkin_from_ck(int k);
Circuit synth_modk(const Gate &f, int k);
/// Parity-preserving targets over {FREDKIN, NOTNOT}; with `flipping`, any
/// parity-respecting target over {FREDKIN, NOT}.
Circuit synth_parity(const Gate &f, bool flipping);

// Affine family.

Circuit synth_affine(const Gf2Matrix &a, Word b);
Circuit synth_pp_affine(const Gf2Matrix &a, Word b);
Circuit synth_pr_affine(const Gf2Matrix &a, Word b);

enum class IsometryFlavor { F4, T4, T6 };
Circuit synth_isometry(const Gf2Matrix &a, Word b, IsometryFlavor flavor);
/// T_m -> T_6 (m = 4k+2) or T_m -> T_4 (m = 4k) with three T_m gates.
Circuit t_reduce(int m);

/// Wire permutation sending the value on wire i to wire dest[i], as SWAPs.
void append_wire_permutation(Circuit &c, const std::vector<int> &dest);
/// Removes ancilla wires that no gate touches.
Circuit drop_idle_ancillas(const Circuit &c);

// Gadgets.

struct ContractRow {
    Word input;
    Word expected;
    /// Output wires that the contract constrains.
    Word care;
};

struct Gadget {
    Circuit circuit;
    std::string description;
    /// Encoding of a logical bit, when the gadget works on encoded bits.
    std::string alpha0;
    std::string alpha1;
    /// Full-width inputs and the required outputs on the cared-for wires.
    std::vector<ContractRow> contract;

    /// Simulates every contract row.
    bool verify() const;
};

/// Encoded CNOT on two logical bits for any class other than TRIVIAL, NOT,
/// NOTNOT (those throw DegenerateClass).
Gadget encoded_cnot_gadget(const GateClass &c);
/// Encoded Fredkin on three logical bits for non-affine classes.
Gadget encoded_fredkin_gadget(const GateClass &c);
/// Builds the encoded version of a logical CNOT circuit by chaining gadgets.
Gadget encode_cnot_circuit(const Circuit &logical, const GateClass &c);

enum class GarbageKind { Not, And, Copy };
Gadget extract_garbage_gadget(const Gate &g, GarbageKind kind);

}  // namespace revlattice

#endif
