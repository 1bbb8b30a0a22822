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

#include <functional>
#include <string>

#include "revlattice/error.h"
#include "revlattice/named_gates.h"
#include "revlattice/synth.h"

namespace revlattice {

namespace {

// A code for one logical bit: codewords for 0 and 1 of the same length.
struct Code {
    std::string zero;
    std::string one;

    int length() const {
        return static_cast<int>(zero.size());
    }
    Word word(int bit) const {
        return parse_bit_string(bit ? one : zero);
    }
};

const Code kPlain{"0", "1"};
const Code kDualRail{"01", "10"};
const Code kRepetition{"00", "11"};
const Code kDoubleDualRail{"0011", "1100"};

void emit_ck(Circuit &c, std::vector<int> ws) {
    int k = static_cast<int>(ws.size());
    c.append(PrimitiveGate::named(PrimitiveKind::Ck, k), std::move(ws));
}

// Fredkin on (x, a, b); for MOD(k) with k >= 3 it is three C_k gates over
// the given wires held at 1.
void emit_fredkin(Circuit &c, const GateClass &cls, const std::vector<int> &ones, int x, int a, int b) {
    if (cls.is_mod() && cls.modulus() >= 3) {
        for (int t : {a, b, a}) {
            std::vector<int> ws{x, t};
            ws.insert(ws.end(), ones.begin(), ones.end());
            emit_ck(c, ws);
        }
        return;
    }
    c.cswap(x, a, b);
}

std::vector<int> add_ones(Circuit &c, const GateClass &cls) {
    std::vector<int> ones;
    if (cls.is_mod() && cls.modulus() >= 3) {
        for (int i = 0; i < cls.modulus() - 2; i++) {
            ones.push_back(c.add_ancilla(1));
        }
    }
    return ones;
}

// Contract rows for every logical input of a gadget on `bits` encoded bits.
std::vector<ContractRow> logical_contract(const Circuit &c, const Code &code, int bits,
                                          const std::function<Word(Word)> &logical) {
    std::vector<ContractRow> rows;
    int len = code.length();
    auto encode = [&](Word v) {
        Word out = 0;
        for (int i = 0; i < bits; i++) {
            out = (out << len) | code.word(get_wire(v, bits, i));
        }
        return out;
    };
    for (Word v = 0; v < (Word{1} << bits); v++) {
        rows.push_back({c.initial_word(encode(v)), c.initial_word(encode(logical(v))), low_mask(c.width())});
    }
    return rows;
}

Word logical_cnot(Word v) {
    return (v & 0b10) ? v ^ 0b01 : v;
}

Word logical_fredkin(Word v) {
    return fredkin_gate()(v);
}

std::string code_name(const Code &code) {
    if (code.length() == 1) {
        return "plain bits";
    }
    return "codewords " + code.zero + " / " + code.one;
}

Code class_code(const GateClass &cls) {
    switch (cls.kind()) {
        case ClassKind::Trivial:
        case ClassKind::Not:
        case ClassKind::NotNot:
            throw RevError(ErrorCode::DegenerateClass, cls.name() + " cannot compute on encoded bits");
        case ClassKind::All:
        case ClassKind::Cnot:
            return kPlain;
        case ClassKind::CnotNot:
        case ClassKind::CnotNotNot:
        case ClassKind::T4:
        case ClassKind::T4Not:
        case ClassKind::T4NotNot:
            return kRepetition;
        case ClassKind::T6:
        case ClassKind::T6Not:
        case ClassKind::T6NotNot:
            return kDoubleDualRail;
        default:
            return kDualRail;
    }
}

}  // namespace

bool Gadget::verify() const {
    for (const ContractRow &row : contract) {
        if ((simulate(circuit, row.input) & row.care) != (row.expected & row.care)) {
            return false;
        }
    }
    return true;
}

Gadget encoded_cnot_gadget(const GateClass &cls) {
    Code code = class_code(cls);
    int len = code.length();
    Circuit c(2 * len);
    int x = 0;
    int y = len;
    std::string how;
    switch (cls.kind()) {
        case ClassKind::All: {
            int one = c.add_ancilla(1);
            c.ccx(one, x, y);
            how = "TOFFOLI with a control held at 1";
            break;
        }
        case ClassKind::Cnot:
            c.cx(x, y);
            how = "one CNOT";
            break;
        case ClassKind::CnotNot:
        case ClassKind::CnotNotNot:
            c.cxx(x, y, y + 1);
            how = "CNOTNOT from one rail of x onto both rails of y";
            break;
        case ClassKind::T4:
        case ClassKind::T4Not:
        case ClassKind::T4NotNot: {
            int a = c.add_ancilla(0);
            c.append(PrimitiveGate::named(PrimitiveKind::Tk, 4), {x, y, y + 1, a});
            c.swap(x, a);
            how = "T4 on (x, y, y, 0) then a swap of x with the ancilla";
            break;
        }
        case ClassKind::T6:
        case ClassKind::T6Not:
        case ClassKind::T6NotNot: {
            int a = c.add_ancilla(0);
            c.append(PrimitiveGate::named(PrimitiveKind::Tk, 6), {x, y, y + 1, y + 2, y + 3, a});
            c.swap(x, a);
            how = "T6 on (x, y, y, not y, not y, 0) then a swap of x with the ancilla";
            break;
        }
        case ClassKind::F4: {
            int a = c.add_ancilla(1);
            c.append(PrimitiveGate::named(PrimitiveKind::Fk, 4), {x, y, y + 1, a});
            c.swap(x, a);
            c.swap(y, y + 1);
            how = "F4 on (x, y, not y, 1), then swaps";
            break;
        }
        default: {
            std::vector<int> ones = add_ones(c, cls);
            emit_fredkin(c, cls, ones, x, y, y + 1);
            how = "Fredkin controlled by x on the rails of y";
            break;
        }
    }
    Gadget g;
    g.circuit = c;
    g.alpha0 = code.zero;
    g.alpha1 = code.one;
    g.description = "encoded CNOT over " + cls.name() + " on " + code_name(code) + ": " + how;
    g.contract = logical_contract(c, code, 2, logical_cnot);
    return g;
}

Gadget encoded_fredkin_gadget(const GateClass &cls) {
    if (cls.is_affine_class()) {
        throw RevError(ErrorCode::PreconditionViolated, cls.name() + " is affine and cannot simulate Fredkin");
    }
    Gadget g;
    if (cls.kind() == ClassKind::All) {
        g.circuit = synthesize(fredkin_gate(), ClassKind::All);
        g.alpha0 = kPlain.zero;
        g.alpha1 = kPlain.one;
        g.description = "Fredkin over ALL built from Toffoli gates";
        g.contract = logical_contract(g.circuit, kPlain, 3, logical_fredkin);
        return g;
    }
    Circuit c(6);
    std::vector<int> ones = add_ones(c, cls);
    emit_fredkin(c, cls, ones, 0, 2, 4);
    emit_fredkin(c, cls, ones, 0, 3, 5);
    g.circuit = c;
    g.alpha0 = kDualRail.zero;
    g.alpha1 = kDualRail.one;
    g.description = "encoded Fredkin over " + cls.name() + " on dual-rail bits: two Fredkins on matching rails";
    g.contract = logical_contract(c, kDualRail, 3, logical_fredkin);
    return g;
}

Gadget encode_cnot_circuit(const Circuit &logical, const GateClass &cls) {
    if (logical.ancilla_count() != 0) {
        throw RevError(ErrorCode::BadParameter, "logical circuit must not use ancillas");
    }
    Gadget cnot = encoded_cnot_gadget(cls);
    Code code{cnot.alpha0, cnot.alpha1};
    int len = code.length();
    int d = logical.data_wires();
    Circuit c(d * len);
    int gadget_data = 2 * len;
    std::vector<int> shared;
    for (int w = gadget_data; w < cnot.circuit.width(); w++) {
        shared.push_back(c.add_ancilla(cnot.circuit.ancilla_init(w)));
    }
    for (const Op &op : logical.ops()) {
        if (op.gate.kind() == PrimitiveKind::Swap) {
            for (int i = 0; i < len; i++) {
                c.swap(op.wires[0] * len + i, op.wires[1] * len + i);
            }
            continue;
        }
        if (op.gate.kind() != PrimitiveKind::Cnot) {
            throw RevError(ErrorCode::BadParameter, "only CNOT and SWAP can be encoded, got " + op.gate.name());
        }
        std::vector<int> map;
        for (int i = 0; i < len; i++) {
            map.push_back(op.wires[0] * len + i);
        }
        for (int i = 0; i < len; i++) {
            map.push_back(op.wires[1] * len + i);
        }
        map.insert(map.end(), shared.begin(), shared.end());
        c.append_mapped(cnot.circuit, map);
    }
    Gadget g;
    g.circuit = c;
    g.alpha0 = code.zero;
    g.alpha1 = code.one;
    g.description = "encoded " + std::to_string(d) + "-bit CNOT circuit over " + cls.name();
    Gate target = realized_transformation(logical);
    g.contract = logical_contract(c, code, d, [&target](Word v) { return target(v); });
    return g;
}

namespace {

// Circuit applying g once, with g's input wire `free[i]` on data wire i and
// every other input of g on an ancilla fixed to its bit in `fixed`.
// wire_of[t] receives the circuit wire carrying g's wire t.
Circuit restriction_circuit(const Gate &g, const std::vector<int> &free, Word fixed, std::vector<int> &wire_of) {
    int n = g.arity();
    Circuit c(static_cast<int>(free.size()));
    wire_of.assign(n, -1);
    for (std::size_t i = 0; i < free.size(); i++) {
        wire_of[free[i]] = static_cast<int>(i);
    }
    for (int t = 0; t < n; t++) {
        if (wire_of[t] < 0) {
            wire_of[t] = c.add_ancilla(get_wire(fixed, n, t));
        }
    }
    c.append(PrimitiveGate::user("G", g), wire_of);
    return c;
}

// Value table of output bit j of g with the free inputs varying and the
// rest taken from `fixed`; entry v uses the bits of v for the free wires.
std::vector<int> restricted_output(const Gate &g, int j, const std::vector<int> &free, Word fixed) {
    int n = g.arity();
    int m = static_cast<int>(free.size());
    std::vector<int> f(std::size_t{1} << m);
    for (Word v = 0; v < f.size(); v++) {
        Word x = fixed;
        for (int i = 0; i < m; i++) {
            x = set_wire(x, n, free[i], get_wire(v, m, i));
        }
        f[v] = get_wire(g(x), n, j);
    }
    return f;
}

bool is_affine_function(const std::vector<int> &f, int m) {
    int c = f[0];
    for (Word v = 0; v < f.size(); v++) {
        int expect = c;
        for (int i = 0; i < m; i++) {
            if (get_wire(v, m, i)) {
                expect ^= f[basis_word(m, i)] ^ c;
            }
        }
        if (f[v] != expect) {
            return false;
        }
    }
    return true;
}

Gadget not_gadget(const Gate &g) {
    int n = g.arity();
    for (int j = 0; j < n; j++) {
        for (int i = 0; i < n; i++) {
            for (Word x = 0; x < g.size(); x++) {
                if (get_wire(x, n, i)) {
                    continue;
                }
                Word x1 = set_wire(x, n, i, 1);
                if (get_wire(g(x), n, j) == 1 && get_wire(g(x1), n, j) == 0) {
                    std::vector<int> wire_of;
                    Circuit c = restriction_circuit(g, {i}, x, wire_of);
                    int out = wire_of[j];
                    Gadget gd;
                    gd.circuit = c;
                    gd.description = "NOT with garbage: input wire " + std::to_string(i + 1) +
                                     " free, others fixed from " + to_bit_string(x, n) + "; output wire " +
                                     std::to_string(j + 1) + " is its negation";
                    for (int b = 0; b <= 1; b++) {
                        Word in = c.initial_word(static_cast<Word>(b));
                        Word expected = static_cast<Word>(1 - b) << (c.width() - 1 - out);
                        gd.contract.push_back({in, expected, basis_word(c.width(), out)});
                    }
                    return gd;
                }
            }
        }
    }
    throw RevError(ErrorCode::PreconditionViolated, "gate is trivial: every output is a monotone copy of an input");
}

Gadget and_gadget(const Gate &g) {
    int n = g.arity();
    if (n < 2) {
        throw RevError(ErrorCode::PreconditionViolated, "gate is affine");
    }
    std::vector<int> all(n);
    for (int i = 0; i < n; i++) {
        all[i] = i;
    }
    int j = -1;
    for (int t = 0; t < n && j < 0; t++) {
        if (!is_affine_function(restricted_output(g, t, all, 0), n)) {
            j = t;
        }
    }
    if (j < 0) {
        throw RevError(ErrorCode::PreconditionViolated, "gate is affine");
    }
    // Fix one variable at a time, keeping the restriction non-affine.
    std::vector<int> free = all;
    Word fixed = 0;
    while (free.size() > 2) {
        bool reduced = false;
        for (std::size_t pos = 0; pos < free.size() && !reduced; pos++) {
            for (int bit = 0; bit <= 1 && !reduced; bit++) {
                std::vector<int> rest = free;
                rest.erase(rest.begin() + static_cast<long>(pos));
                Word fx = set_wire(fixed, n, free[pos], bit);
                if (!is_affine_function(restricted_output(g, j, rest, fx), static_cast<int>(rest.size()))) {
                    free = rest;
                    fixed = fx;
                    reduced = true;
                }
            }
        }
        if (!reduced) {
            throw RevError(ErrorCode::VerificationFailed, "no non-affine restriction found");
        }
    }
    std::vector<int> f = restricted_output(g, j, free, fixed);
    // A non-affine 2-bit function is (u ^ a)(v ^ b) ^ c; the odd one out
    // among the four values sits at u = not a, v = not b.
    Word odd = 0;
    for (Word v = 0; v < 4; v++) {
        int others = 0;
        for (Word w = 0; w < 4; w++) {
            others += (w != v && f[w] == f[v]) ? 1 : 0;
        }
        if (others == 0) {
            odd = v;
        }
    }
    int na = 1 - static_cast<int>((odd >> 1) & 1);
    int nb = 1 - static_cast<int>(odd & 1);
    int nc = f[odd] ^ 1;
    std::vector<int> wire_of;
    Circuit c = restriction_circuit(g, free, fixed, wire_of);
    int out = wire_of[j];
    Gadget gd;
    gd.circuit = c;
    gd.description = "AND with garbage: inputs " + std::to_string(free[0] + 1) + ", " + std::to_string(free[1] + 1) +
                     " free, others fixed from " + to_bit_string(fixed, n) + "; output wire " +
                     std::to_string(j + 1) + " is ";
    std::string u = (na ? "not u" : "u");
    std::string v = (nb ? "not v" : "v");
    gd.description += (nc ? "not " : "") + std::string("(") + u + " and " + v + ")";
    for (Word in = 0; in < 4; in++) {
        int a = static_cast<int>((in >> 1) & 1) ^ na;
        int b = static_cast<int>(in & 1) ^ nb;
        int val = (a & b) ^ nc;
        gd.contract.push_back({c.initial_word(in), static_cast<Word>(val) << (c.width() - 1 - out),
                               basis_word(c.width(), out)});
    }
    return gd;
}

Gadget copy_gadget(const Gate &g) {
    int n = g.arity();
    for (int i = 0; i < n; i++) {
        for (Word x = 0; x < g.size(); x++) {
            if (get_wire(x, n, i)) {
                continue;
            }
            Word x1 = set_wire(x, n, i, 1);
            Word diff = g(x) ^ g(x1);
            if (weight(diff) < 2) {
                continue;
            }
            std::vector<int> outs;
            for (int t = 0; t < n && outs.size() < 2; t++) {
                if (get_wire(diff, n, t)) {
                    outs.push_back(t);
                }
            }
            std::vector<int> wire_of;
            Circuit c = restriction_circuit(g, {i}, x, wire_of);
            Gadget gd;
            gd.circuit = c;
            Word care = basis_word(c.width(), wire_of[outs[0]]) | basis_word(c.width(), wire_of[outs[1]]);
            for (int b = 0; b <= 1; b++) {
                Word image = b ? g(x1) : g(x);
                Word expected = 0;
                for (int t : outs) {
                    if (get_wire(image, n, t)) {
                        expected |= basis_word(c.width(), wire_of[t]);
                    }
                }
                gd.contract.push_back({c.initial_word(static_cast<Word>(b)), expected, care});
            }
            auto polarity = [&](int t) { return get_wire(g(x), n, t) ? std::string("not x") : std::string("x"); };
            gd.description = "COPY with garbage: input wire " + std::to_string(i + 1) + " free, others fixed from " +
                             to_bit_string(x, n) + "; outputs " + std::to_string(outs[0] + 1) + " and " +
                             std::to_string(outs[1] + 1) + " are " + polarity(outs[0]) + " and " +
                             polarity(outs[1]);
            return gd;
        }
    }
    throw RevError(ErrorCode::PreconditionViolated, "gate is degenerate: each input bit reaches one output");
}

}  // namespace

Gadget extract_garbage_gadget(const Gate &g, GarbageKind kind) {
    switch (kind) {
        case GarbageKind::Not:
            return not_gadget(g);
        case GarbageKind::And:
            return and_gadget(g);
        case GarbageKind::Copy:
            return copy_gadget(g);
    }
    throw RevError(ErrorCode::BadParameter, "unknown gadget kind");
}

}  // namespace revlattice
