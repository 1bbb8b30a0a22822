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

#include "revlattice/lattice.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <numeric>

#include "revlattice/error.h"
#include "revlattice/named_gates.h"

namespace revlattice {

namespace {

using K = ClassKind;
constexpr int kKinds = static_cast<int>(K::All) + 1;

// Covering edges between the non-MOD classes (parent contains child). The
// MOD family is handled separately in leq().
const std::vector<std::pair<K, K>> &cover_edges() {
    static const std::vector<std::pair<K, K>> edges = {
        {K::All, K::Cnot},           {K::All, K::FredkinNot},       {K::FredkinNot, K::CnotNotNot},
        {K::FredkinNot, K::CnotNot}, {K::FredkinNot, K::Fredkin},   {K::Cnot, K::CnotNotNot},
        {K::CnotNotNot, K::CnotNot}, {K::CnotNotNot, K::T4Not},     {K::CnotNot, K::T4NotNot},
        {K::T4Not, K::T4NotNot},     {K::T4Not, K::T6Not},          {K::T4NotNot, K::F4},
        {K::T4NotNot, K::T4},        {K::T4NotNot, K::T6NotNot},    {K::F4, K::T6},
        {K::T4, K::T6},              {K::T6Not, K::T6NotNot},       {K::T6Not, K::Not},
        {K::T6NotNot, K::T6},        {K::T6NotNot, K::NotNot},      {K::Not, K::NotNot},
        {K::NotNot, K::Trivial},     {K::T6, K::Trivial},           {K::Fredkin, K::Trivial},
    };
    return edges;
}

// reach[a][b]: b is below or equal to a among the non-MOD classes.
const std::array<std::array<bool, kKinds>, kKinds> &reach() {
    static const auto table = [] {
        std::array<std::array<bool, kKinds>, kKinds> r{};
        for (int a = 0; a < kKinds; a++) {
            r[a][a] = true;
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [p, c] : cover_edges()) {
                for (int x = 0; x < kKinds; x++) {
                    if (r[(int)c][x] && !r[(int)p][x]) {
                        r[(int)p][x] = true;
                        changed = true;
                    }
                }
            }
        }
        return r;
    }();
    return table;
}

bool finite_leq(K a, K b) {
    return reach()[(int)b][(int)a];
}

struct Invariant {
    const char *name;
    std::function<bool(const InvariantSignature &)> holds;
};

bool even_offset(const InvariantSignature &s) {
    return s.affine && weight(s.affine->offset) % 2 == 0;
}

std::vector<Invariant> defining_invariants(const GateClass &c) {
    Invariant affine{"affine", [](const InvariantSignature &s) { return s.affine.has_value(); }};
    Invariant linear{"linear", [](const InvariantSignature &s) { return s.linear; }};
    Invariant degenerate{"degenerate", [](const InvariantSignature &s) { return s.degenerate; }};
    Invariant orthogonal{"orthogonal linear part", [](const InvariantSignature &s) { return s.orthogonal; }};
    Invariant mod4_part{"mod-4-preserving linear part",
                        [](const InvariantSignature &s) { return s.linear_part_mod4; }};
    Invariant parity{"parity-preserving", [](const InvariantSignature &s) { return s.parity_preserving; }};
    Invariant even{"even offset", even_offset};
    Invariant respecting{"parity-respecting",
                         [](const InvariantSignature &s) { return s.parity_preserving || s.parity_flipping; }};
    switch (c.kind()) {
        case K::Trivial:
            return {affine, degenerate, linear};
        case K::NotNot:
            return {affine, degenerate, parity};
        case K::Not:
            return {affine, degenerate};
        case K::T6:
            return {affine, linear, orthogonal, mod4_part};
        case K::T6NotNot:
            return {affine, orthogonal, mod4_part, parity};
        case K::T6Not:
            return {affine, orthogonal, mod4_part};
        case K::T4:
            return {affine, linear, orthogonal};
        case K::F4:
            return {affine, {"mod-4-preserving", [](const InvariantSignature &s) { return s.mod4_preserving; }}};
        case K::T4NotNot:
            return {affine, orthogonal, parity};
        case K::T4Not:
            return {affine, orthogonal};
        case K::CnotNot:
            return {affine, parity};
        case K::CnotNotNot:
            return {affine, respecting};
        case K::Cnot:
            return {affine};
        case K::Fredkin:
            return {{"conservative", [](const InvariantSignature &s) { return s.conservative; }}};
        case K::Mod: {
            int k = c.modulus();
            return {{k == 2 ? "parity-preserving" : "mod-k-preserving",
                     [k](const InvariantSignature &s) { return s.preserves_mod(k); }}};
        }
        case K::FredkinNot:
            return {respecting};
        case K::All:
            return {};
    }
    return {};
}

}  // namespace

GateClass GateClass::mod(int k) {
    if (k < 2) {
        throw RevError(ErrorCode::BadParameter, "MOD(k) needs k >= 2");
    }
    GateClass c(K::Mod);
    c.k_ = k;
    return c;
}

bool GateClass::is_affine_class() const {
    switch (kind_) {
        case K::Fredkin:
        case K::Mod:
        case K::FredkinNot:
        case K::All:
            return false;
        default:
            return true;
    }
}

std::string GateClass::name() const {
    switch (kind_) {
        case K::Trivial:
            return "TRIVIAL";
        case K::NotNot:
            return "NOTNOT";
        case K::Not:
            return "NOT";
        case K::T6:
            return "T6";
        case K::T6NotNot:
            return "T6+NOTNOT";
        case K::T6Not:
            return "T6+NOT";
        case K::T4:
            return "T4";
        case K::F4:
            return "F4";
        case K::T4NotNot:
            return "T4+NOTNOT";
        case K::T4Not:
            return "T4+NOT";
        case K::CnotNot:
            return "CNOTNOT";
        case K::CnotNotNot:
            return "CNOTNOT+NOT";
        case K::Cnot:
            return "CNOT";
        case K::Fredkin:
            return "FREDKIN";
        case K::Mod:
            return "MOD" + std::to_string(k_);
        case K::FredkinNot:
            return "FREDKIN+NOT";
        case K::All:
            return "ALL";
    }
    return "?";
}

std::string GateClass::description() const {
    switch (kind_) {
        case K::Trivial:
            return "wire permutations";
        case K::NotNot:
            return "degenerate, parity-preserving (wire permutations with an even number of NOTs)";
        case K::Not:
            return "degenerate (wire permutations with NOTs)";
        case K::T6:
            return "linear, orthogonal, mod-4-preserving";
        case K::T6NotNot:
            return "affine, parity-preserving, orthogonal mod-4-preserving linear part";
        case K::T6Not:
            return "affine, orthogonal mod-4-preserving linear part";
        case K::T4:
            return "linear, orthogonal";
        case K::F4:
            return "affine, mod-4-preserving";
        case K::T4NotNot:
            return "affine, parity-preserving, orthogonal linear part";
        case K::T4Not:
            return "affine, orthogonal linear part (isometries)";
        case K::CnotNot:
            return "affine, parity-preserving";
        case K::CnotNotNot:
            return "affine, parity-respecting";
        case K::Cnot:
            return "affine";
        case K::Fredkin:
            return "conservative";
        case K::Mod:
            return k_ == 2 ? "parity-preserving" : "mod-" + std::to_string(k_) + "-preserving";
        case K::FredkinNot:
            return "parity-respecting";
        case K::All:
            return "all reversible transformations";
    }
    return "?";
}

GateClass parse_class_name(const std::string &name) {
    std::string u;
    for (char ch : name) {
        u += ch == '_' ? '+' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    if (u.size() > 3 && u.compare(0, 3, "MOD") == 0 &&
        std::all_of(u.begin() + 3, u.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        if (u.size() > 9) {
            throw RevError(ErrorCode::ParseError, "modulus too large in " + name);
        }
        int k = std::stoi(u.substr(3));
        if (k < 2) {
            throw RevError(ErrorCode::ParseError, "MOD class needs k >= 2");
        }
        return GateClass::mod(k);
    }
    for (const GateClass &c : finite_catalog()) {
        if (c.name() == u) {
            return c;
        }
    }
    throw RevError(ErrorCode::ParseError, "unknown class name '" + name + "'");
}

std::vector<GateClass> finite_catalog() {
    std::vector<GateClass> out;
    for (int i = 0; i < kKinds; i++) {
        if ((K)i != K::Mod) {
            out.emplace_back((K)i);
        }
    }
    return out;
}

std::vector<GateClass> classes_realizable_at(int n) {
    std::vector<GateClass> out = finite_catalog();
    for (int k = 2; k <= std::max(n, 2); k++) {
        out.push_back(GateClass::mod(k));
    }
    return out;
}

bool contains(const GateClass &c, const InvariantSignature &s) {
    for (const Invariant &inv : defining_invariants(c)) {
        if (!inv.holds(s)) {
            return false;
        }
    }
    return true;
}

bool contains(const GateClass &c, const Gate &g) {
    return contains(c, signature(g));
}

std::string separating_invariant(const GateClass &c, const InvariantSignature &s) {
    for (const Invariant &inv : defining_invariants(c)) {
        if (!inv.holds(s)) {
            if (c.is_mod() && c.modulus() > 2) {
                return "mod-" + std::to_string(c.modulus()) + "-preserving";
            }
            return inv.name;
        }
    }
    return "";
}

bool leq(const GateClass &a, const GateClass &b) {
    if (a == b || b.kind() == K::All || a.kind() == K::Trivial) {
        return true;
    }
    if (a.is_mod() && b.is_mod()) {
        return a.modulus() % b.modulus() == 0;
    }
    if (a.is_mod()) {
        return b.kind() == K::FredkinNot && a.modulus() % 2 == 0;
    }
    if (b.is_mod()) {
        if (a.kind() == K::Fredkin) {
            return true;
        }
        if (b.modulus() == 2) {
            return finite_leq(a.kind(), K::CnotNot);
        }
        if (b.modulus() == 4) {
            return finite_leq(a.kind(), K::F4);
        }
        return false;
    }
    return finite_leq(a.kind(), b.kind());
}

GateClass join(const GateClass &a, const GateClass &b) {
    std::vector<GateClass> candidates = finite_catalog();
    auto add_divisors = [&](int k) {
        for (int d = 2; d <= k; d++) {
            if (k % d == 0) {
                candidates.push_back(GateClass::mod(d));
            }
        }
    };
    add_divisors(4);
    if (a.is_mod()) {
        add_divisors(a.modulus());
    }
    if (b.is_mod()) {
        add_divisors(b.modulus());
    }
    std::vector<GateClass> upper;
    for (const GateClass &c : candidates) {
        if (leq(a, c) && leq(b, c)) {
            upper.push_back(c);
        }
    }
    for (const GateClass &u : upper) {
        if (std::all_of(upper.begin(), upper.end(), [&](const GateClass &v) { return leq(u, v); })) {
            return u;
        }
    }
    throw RevError(ErrorCode::PreconditionViolated, "no least upper bound for " + a.name() + " and " + b.name());
}

GateClass classify(const InvariantSignature &s) {
    if (!s.affine) {
        if (s.conservative) {
            return K::Fredkin;
        }
        int k = s.respecting.value();
        if (k >= 3) {
            return GateClass::mod(k);
        }
        if (k == 2) {
            return s.parity_preserving ? GateClass::mod(2) : GateClass(K::FredkinNot);
        }
        return K::All;
    }
    int bw = weight(s.affine->offset);
    bool even = bw % 2 == 0;
    if (s.degenerate) {
        if (bw == 0) {
            return K::Trivial;
        }
        return even ? K::NotNot : K::Not;
    }
    if (s.linear_part_mod4) {
        if (bw == 0) {
            return K::T6;
        }
        return even ? K::T6NotNot : K::T6Not;
    }
    if (s.orthogonal) {
        if (s.mod4_preserving) {
            return K::F4;
        }
        if (bw == 0) {
            return K::T4;
        }
        return even ? K::T4NotNot : K::T4Not;
    }
    if (s.odd_columns) {
        return even ? K::CnotNot : K::CnotNotNot;
    }
    return K::Cnot;
}

GateClass classify_gate(const Gate &g) {
    return classify(signature(g));
}

GateClass classify_set(const std::vector<Gate> &gates) {
    GateClass c = K::Trivial;
    for (const Gate &g : gates) {
        c = join(c, classify_gate(g));
    }
    return c;
}

bool generates(const std::vector<Gate> &gates, const Gate &target) {
    return contains(classify_set(gates), target);
}

GateClass loose_collapse(const GateClass &c) {
    switch (c.kind()) {
        case K::NotNot:
            return K::Not;
        case K::T4NotNot:
            return K::T4Not;
        case K::T6NotNot:
            return K::T6Not;
        case K::Mod:
            return c.modulus() == 2 ? GateClass(K::FredkinNot) : c;
        default:
            return c;
    }
}

std::vector<Gate> canonical_generator(const GateClass &c) {
    switch (c.kind()) {
        case K::Trivial:
            return {};
        case K::NotNot:
            return {notnot_gate()};
        case K::Not:
            return {not_gate()};
        case K::T6:
            return {tk_gate(6)};
        case K::T6NotNot:
            return {tk_gate(6), notnot_gate()};
        case K::T6Not:
            return {tk_gate(6), not_gate()};
        case K::T4:
            return {tk_gate(4)};
        case K::F4:
            return {fk_gate(4)};
        case K::T4NotNot:
            return {tk_gate(4), notnot_gate()};
        case K::T4Not:
            return {tk_gate(4), not_gate()};
        case K::CnotNot:
            return {cnotnot_gate()};
        case K::CnotNotNot:
            return {cnotnot_gate(), not_gate()};
        case K::Cnot:
            return {cnot_gate()};
        case K::Fredkin:
            return {fredkin_gate()};
        case K::Mod:
            if (c.modulus() == 2) {
                return {fredkin_gate(), notnot_gate()};
            }
            return {ck_gate(c.modulus())};
        case K::FredkinNot:
            return {fredkin_gate(), not_gate()};
        case K::All:
            return {toffoli_gate()};
    }
    return {};
}

Gate canonical_single_gate(const GateClass &c) {
    std::vector<Gate> gens = canonical_generator(c);
    if (gens.empty()) {
        return swap_gate();
    }
    Gate g = gens[0];
    for (std::size_t i = 1; i < gens.size(); i++) {
        g = tensor(g, gens[i]);
    }
    return g;
}

}  // namespace revlattice
