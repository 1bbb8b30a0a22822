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

#ifndef REVLATTICE_LATTICE_H
#define REVLATTICE_LATTICE_H

#include <string>
#include <vector>

#include "revlattice/gate.h"

namespace revlattice {

enum class ClassKind {
    Trivial,
    NotNot,
    Not,
    T6,
    T6NotNot,
    T6Not,
    T4,
    F4,
    T4NotNot,
    T4Not,
    CnotNot,
    CnotNotNot,
    Cnot,
    Fredkin,
    Mod,
    FredkinNot,
    All,
};

/// One element of the lattice of reversible gate classes. MOD(k) carries its
/// modulus; MOD(2) is the class of all parity-preserving transformations.
class GateClass {
   public:
    constexpr GateClass() = default;
    constexpr GateClass(ClassKind kind) : kind_(kind) {
    }
    /// Throws BadParameter for k < 2.
    static GateClass mod(int k);

    ClassKind kind() const {
        return kind_;
    }
    /// Modulus of a MOD class, 0 otherwise.
    int modulus() const {
        return k_;
    }
    bool is_mod() const {
        return kind_ == ClassKind::Mod;
    }
    bool is_affine_class() const;

    /// Stable symbolic name, e.g. "T6+NOT", "MOD3".
    std::string name() const;
    /// Human-readable characterization of the members.
    std::string description() const;

    bool operator==(const GateClass &) const = default;
    bool operator<(const GateClass &o) const {
        return kind_ != o.kind_ ? kind_ < o.kind_ : k_ < o.k_;
    }

   private:
    ClassKind kind_ = ClassKind::Trivial;
    int k_ = 0;
};

/// Parses a symbolic name (case-insensitive; '_' and '+' interchangeable).
/// Throws ParseError on unknown names.
GateClass parse_class_name(const std::string &name);

/// The sixteen classes other than the MOD family.
std::vector<GateClass> finite_catalog();
/// finite_catalog() plus MOD(k) for 2 <= k <= max(n, 2).
std::vector<GateClass> classes_realizable_at(int n);

bool contains(const GateClass &c, const InvariantSignature &s);
bool contains(const GateClass &c, const Gate &g);

/// The first defining invariant of c that s violates, or "" if s is in c.
std::string separating_invariant(const GateClass &c, const InvariantSignature &s);

/// Containment order: leq(a, b) iff every member of a is a member of b.
bool leq(const GateClass &a, const GateClass &b);
GateClass join(const GateClass &a, const GateClass &b);

GateClass classify(const InvariantSignature &s);
GateClass classify_gate(const Gate &g);
GateClass classify_set(const std::vector<Gate> &gates);
bool generates(const std::vector<Gate> &gates, const Gate &target);

/// Class reached when ancillas may end in any input-independent state.
GateClass loose_collapse(const GateClass &c);

/// Named generators of c; classify_set of the result equals c.
std::vector<Gate> canonical_generator(const GateClass &c);
/// A single gate generating c (tensor products of the named generators).
Gate canonical_single_gate(const GateClass &c);

}  // namespace revlattice

#endif
