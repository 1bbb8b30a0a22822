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

#ifndef REVLATTICE_CIRCUIT_H
#define REVLATTICE_CIRCUIT_H

#include <memory>
#include <string>
#include <vector>

#include "revlattice/gate.h"

namespace revlattice {

enum class PrimitiveKind { Not, NotNot, Cnot, CnotNot, Toffoli, Fredkin, Swap, Ck, Tk, Fk, User };

/// A gate that may appear in a circuit. Named gates carry their parameter
/// (the k of CK/TK/FK); USER gates carry a label and an explicit table.
class PrimitiveGate {
   public:
    static PrimitiveGate named(PrimitiveKind kind, int k = 0);
    static PrimitiveGate user(std::string label, Gate table);
    /// Parses "NOT", "CNOT", "CK4", "TK6", "FK4", ... Throws ParseError.
    static PrimitiveGate parse_named(const std::string &name);

    PrimitiveKind kind() const {
        return kind_;
    }
    int param() const {
        return k_;
    }
    int arity() const {
        return table_->arity();
    }
    const Gate &table() const {
        return *table_;
    }
    const std::string &label() const {
        return label_;
    }
    /// Name as written in circuit files.
    std::string name() const;
    PrimitiveGate inverse() const;

    bool operator==(const PrimitiveGate &o) const;

   private:
    PrimitiveKind kind_ = PrimitiveKind::Not;
    int k_ = 0;
    std::string label_;
    std::shared_ptr<const Gate> table_;
};

struct Op {
    PrimitiveGate gate;
    /// 0-based wires; controls first, targets last.
    std::vector<int> wires;
};

/// A width, a count of leading data wires, initial bits for the remaining
/// (ancilla) wires, and an ordered list of gate applications.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(int data_wires);

    int width() const {
        return width_;
    }
    int data_wires() const {
        return data_;
    }
    int ancilla_count() const {
        return width_ - data_;
    }
    /// Initial bit of wire w >= data_wires().
    int ancilla_init(int wire) const {
        return ancilla_init_[wire - data_];
    }
    const std::vector<int> &ancilla_inits() const {
        return ancilla_init_;
    }
    const std::vector<Op> &ops() const {
        return ops_;
    }

    /// Adds a wire at the end; returns its index.
    int add_ancilla(int init_bit);
    /// Validates wire list length and distinctness.
    void append(const PrimitiveGate &gate, std::vector<int> wires);
    /// Appends `sub`'s ops with sub wire i mapped to wires[i]. Ancilla
    /// declarations of `sub` are ignored; the caller maps them.
    void append_mapped(const Circuit &sub, const std::vector<int> &wires);

    void x(int w);
    void xx(int a, int b);
    void cx(int c, int t);
    void cxx(int c, int t1, int t2);
    void ccx(int c1, int c2, int t);
    void cswap(int c, int a, int b);
    void swap(int a, int b);

    /// Full-width word with data bits from `data` and ancilla bits at their
    /// initial values.
    Word initial_word(Word data) const;

   private:
    int width_ = 0;
    int data_ = 0;
    std::vector<int> ancilla_init_;
    std::vector<Op> ops_;
};

inline constexpr int kEnumerationBudget = 24;

Word simulate(const Circuit &c, Word x);
/// Applies a single op to a full-width state.
Word apply_op(const Op &op, int width, Word x);

enum class AncillaRule { Strict, Loose };

/// The d-bit transformation realized on the data wires.
Gate realized_transformation(const Circuit &c, AncillaRule rule = AncillaRule::Strict);

struct AncillaViolation {
    Word input;
    int wire;
    int observed;
};
struct Mismatch {
    Word input;
    Word expected;
    Word observed;
};

struct VerificationReport {
    bool implements_target = false;
    std::vector<AncillaViolation> ancilla_violations;
    std::vector<Mismatch> mismatches;
    std::size_t gate_count = 0;
    int ancilla_count = 0;

    std::string str(int data_wires) const;
};

VerificationReport verify(const Circuit &c, const Gate &target, AncillaRule rule = AncillaRule::Strict);

Circuit invert(const Circuit &c);
Circuit concatenate(const Circuit &a, const Circuit &b);

struct CircuitStats {
    std::size_t gate_count = 0;
    int ancilla_count = 0;
    int depth = 0;
};
CircuitStats stats(const Circuit &c);

}  // namespace revlattice

#endif
