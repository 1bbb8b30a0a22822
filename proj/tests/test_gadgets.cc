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

#include <gtest/gtest.h>

#include "revlattice/error.h"
#include "revlattice/named_gates.h"
#include "revlattice/synth.h"

namespace revlattice {
namespace {

TEST(EncodedCnot, FredkinDualRailIsOneGate) {
    Gadget g = encoded_cnot_gadget(ClassKind::Fredkin);
    EXPECT_EQ(g.alpha0, "01");
    EXPECT_EQ(g.alpha1, "10");
    EXPECT_EQ(g.circuit.ops().size(), 1u);
    EXPECT_TRUE(g.verify());
}

TEST(EncodedCnot, T4RepetitionWithOneZeroAncilla) {
    Gadget g = encoded_cnot_gadget(ClassKind::T4);
    EXPECT_EQ(g.alpha0, "00");
    EXPECT_EQ(g.alpha1, "11");
    EXPECT_EQ(g.circuit.ancilla_count(), 1);
    EXPECT_EQ(g.circuit.ancilla_inits()[0], 0);
    EXPECT_TRUE(g.verify());
}

TEST(EncodedCnot, CnotClassIsTrivialEncoding) {
    Gadget g = encoded_cnot_gadget(ClassKind::Cnot);
    EXPECT_EQ(g.alpha0, "0");
    EXPECT_EQ(g.circuit.ops().size(), 1u);
    EXPECT_TRUE(g.verify());
}

TEST(EncodedCnot, EveryNondegenerateClass) {
    std::vector<GateClass> classes = finite_catalog();
    classes.push_back(GateClass::mod(3));
    classes.push_back(GateClass::mod(5));
    for (const GateClass &c : classes) {
        if (c == ClassKind::Trivial || c == ClassKind::Not || c == ClassKind::NotNot) {
            try {
                encoded_cnot_gadget(c);
                ADD_FAILURE() << c.name();
            } catch (const RevError &e) {
                EXPECT_EQ(e.code(), ErrorCode::DegenerateClass);
            }
            continue;
        }
        Gadget g = encoded_cnot_gadget(c);
        EXPECT_EQ(g.contract.size(), 4u);
        EXPECT_TRUE(g.verify()) << c.name();
        // The gadget only uses gates of the class.
        Circuit strict = g.circuit;
        for (const Op &op : strict.ops()) {
            if (op.gate.kind() != PrimitiveKind::Swap) {
                EXPECT_TRUE(contains(c, op.gate.table())) << c.name() << " " << op.gate.name();
            }
        }
    }
}

TEST(EncodedFredkin, NonAffineClasses) {
    for (GateClass c : {GateClass(ClassKind::All), GateClass(ClassKind::Fredkin), GateClass(ClassKind::FredkinNot),
                        GateClass::mod(2), GateClass::mod(3), GateClass::mod(4)}) {
        Gadget g = encoded_fredkin_gadget(c);
        EXPECT_EQ(g.contract.size(), 8u);
        EXPECT_TRUE(g.verify()) << c.name();
    }
    EXPECT_THROW(encoded_fredkin_gadget(ClassKind::Cnot), RevError);
}

TEST(EncodedCircuits, ChainedCnotsReproduceAffineCircuits) {
    Circuit logical(3);
    logical.cx(0, 1);
    logical.cx(1, 2);
    logical.swap(0, 2);
    logical.cx(2, 0);
    for (GateClass c : {GateClass(ClassKind::Fredkin), GateClass(ClassKind::T4), GateClass(ClassKind::T6),
                        GateClass(ClassKind::F4), GateClass(ClassKind::CnotNot), GateClass::mod(3)}) {
        Gadget g = encode_cnot_circuit(logical, c);
        EXPECT_EQ(g.contract.size(), 8u);
        EXPECT_TRUE(g.verify()) << c.name();
    }
}

TEST(Garbage, ToffoliAnd) {
    Gadget g = extract_garbage_gadget(toffoli_gate(), GarbageKind::And);
    EXPECT_TRUE(g.verify());
    // Restriction (x, y, 0): the third wire is an ancilla at 0 and carries xy.
    ASSERT_EQ(g.circuit.ancilla_count(), 1);
    EXPECT_EQ(g.circuit.ancilla_inits()[0], 0);
    for (const ContractRow &row : g.contract) {
        Word x = row.input >> 1;
        EXPECT_EQ(row.expected & 1, (x == 0b11) ? 1u : 0u);
    }
}

TEST(Garbage, FredkinCopy) {
    Gadget g = extract_garbage_gadget(fredkin_gate(), GarbageKind::Copy);
    EXPECT_TRUE(g.verify());
    ASSERT_EQ(g.circuit.ancilla_count(), 2);
    EXPECT_EQ(g.circuit.ancilla_inits()[0], 0);
    EXPECT_EQ(g.circuit.ancilla_inits()[1], 1);
    // x01 -> x, x, not x.
    for (Word x = 0; x <= 1; x++) {
        Word out = simulate(g.circuit, g.circuit.initial_word(x));
        EXPECT_EQ(out, x ? 0b110u : 0b001u);
    }
}

TEST(Garbage, SwapHasNoNot) {
    try {
        extract_garbage_gadget(swap_gate(), GarbageKind::Not);
        FAIL();
    } catch (const RevError &e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
    }
}

TEST(Garbage, PreconditionsFollowClasses) {
    EXPECT_THROW(extract_garbage_gadget(cnot_gate(), GarbageKind::And), RevError);
    EXPECT_THROW(extract_garbage_gadget(not_gate(), GarbageKind::Copy), RevError);
    EXPECT_TRUE(extract_garbage_gadget(not_gate(), GarbageKind::Not).verify());
    EXPECT_TRUE(extract_garbage_gadget(cnot_gate(), GarbageKind::Copy).verify());
    EXPECT_TRUE(extract_garbage_gadget(fredkin_gate(), GarbageKind::And).verify());
    EXPECT_TRUE(extract_garbage_gadget(ck_gate(3), GarbageKind::Not).verify());
}

TEST(Garbage, AndFromEveryNonAffineThreeBitGate) {
    // Every transposition of 3-bit strings at distance >= 2 is non-affine.
    for (Word y = 0; y < 8; y++) {
        for (Word z = y + 1; z < 8; z++) {
            Gate t = transposition_gate(3, y, z);
            if (affine_form(t)) {
                continue;
            }
            Gadget g = extract_garbage_gadget(t, GarbageKind::And);
            EXPECT_TRUE(g.verify()) << y << " " << z;
        }
    }
}

}  // namespace
}  // namespace revlattice
