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

#include "revlattice/circuit.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "revlattice/error.h"
#include "revlattice/named_gates.h"

namespace revlattice {

namespace {

std::shared_ptr<const Gate> named_table(PrimitiveKind kind, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Gate>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), k);
    auto it = cache.find(key);
    if (it != cache.end()) {
        return it->second;
    }
    Gate g;
    switch (kind) {
        case PrimitiveKind::Not:
            g = not_gate();
            break;
        case PrimitiveKind::NotNot:
            g = notnot_gate();
            break;
        case PrimitiveKind::Cnot:
            g = cnot_gate();
            break;
        case PrimitiveKind::CnotNot:
            g = cnotnot_gate();
            break;
        case PrimitiveKind::Toffoli:
            g = toffoli_gate();
            break;
        case PrimitiveKind::Fredkin:
            g = fredkin_gate();
            break;
        case PrimitiveKind::Swap:
            g = swap_gate();
            break;
        case PrimitiveKind::Ck:
            g = ck_gate(k);
            break;
        case PrimitiveKind::Tk:
            g = tk_gate(k);
            break;
        case PrimitiveKind::Fk:
            g = fk_gate(k);
            break;
        case PrimitiveKind::User:
            throw RevError(ErrorCode::BadParameter, "USER gates need an explicit table");
    }
    auto p = std::make_shared<const Gate>(std::move(g));
    cache.emplace(key, p);
    return p;
}

const char *fixed_name(PrimitiveKind kind) {
    switch (kind) {
        case PrimitiveKind::Not:
            return "NOT";
        case PrimitiveKind::NotNot:
            return "NOTNOT";
        case PrimitiveKind::Cnot:
            return "CNOT";
        case PrimitiveKind::CnotNot:
            return "CNOTNOT";
        case PrimitiveKind::Toffoli:
            return "TOFFOLI";
        case PrimitiveKind::Fredkin:
            return "FREDKIN";
        case PrimitiveKind::Swap:
            return "SWAP";
        case PrimitiveKind::Ck:
            return "CK";
        case PrimitiveKind::Tk:
            return "TK";
        case PrimitiveKind::Fk:
            return "FK";
        case PrimitiveKind::User:
            return "USER";
    }
    return "?";
}

}  // namespace

PrimitiveGate PrimitiveGate::named(PrimitiveKind kind, int k) {
    PrimitiveGate p;
    p.kind_ = kind;
    bool parametric = kind == PrimitiveKind::Ck || kind == PrimitiveKind::Tk || kind == PrimitiveKind::Fk;
    p.k_ = parametric ? k : 0;
    p.table_ = named_table(kind, p.k_);
    return p;
}

PrimitiveGate PrimitiveGate::user(std::string label, Gate table) {
    PrimitiveGate p;
    p.kind_ = PrimitiveKind::User;
    p.label_ = std::move(label);
    p.table_ = std::make_shared<const Gate>(std::move(table));
    return p;
}

PrimitiveGate PrimitiveGate::parse_named(const std::string &name) {
    static const PrimitiveKind fixed[] = {PrimitiveKind::Not,     PrimitiveKind::NotNot,  PrimitiveKind::Cnot,
                                          PrimitiveKind::CnotNot, PrimitiveKind::Toffoli, PrimitiveKind::Fredkin,
                                          PrimitiveKind::Swap};
    for (PrimitiveKind k : fixed) {
        if (name == fixed_name(k)) {
            return named(k);
        }
    }
    if (name.size() >= 3 && name.size() <= 6 &&
        std::all_of(name.begin() + 2, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        int k = std::stoi(name.substr(2));
        std::string head = name.substr(0, 2);
        try {
            if (head == "CK") {
                return named(PrimitiveKind::Ck, k);
            }
            if (head == "TK") {
                return named(PrimitiveKind::Tk, k);
            }
            if (head == "FK") {
                return named(PrimitiveKind::Fk, k);
            }
        } catch (const RevError &) {
            throw RevError(ErrorCode::ParseError, "bad gate parameter in '" + name + "'");
        }
    }
    throw RevError(ErrorCode::ParseError, "unknown gate '" + name + "'");
}

std::string PrimitiveGate::name() const {
    switch (kind_) {
        case PrimitiveKind::Ck:
        case PrimitiveKind::Tk:
        case PrimitiveKind::Fk:
            return fixed_name(kind_) + std::to_string(k_);
        case PrimitiveKind::User:
            return label_;
        default:
            return fixed_name(kind_);
    }
}

PrimitiveGate PrimitiveGate::inverse() const {
    if (kind_ != PrimitiveKind::User) {
        return *this;
    }
    Gate inv = revlattice::inverse(*table_);
    if (inv == *table_) {
        return *this;
    }
    return user(label_ + "_INV", std::move(inv));
}

bool PrimitiveGate::operator==(const PrimitiveGate &o) const {
    if (kind_ != o.kind_ || k_ != o.k_) {
        return false;
    }
    return kind_ != PrimitiveKind::User || (label_ == o.label_ && *table_ == *o.table_);
}

Circuit::Circuit(int data_wires) : width_(data_wires), data_(data_wires) {
    if (data_wires < 0) {
        throw RevError(ErrorCode::BadParameter, "negative data wire count");
    }
}

int Circuit::add_ancilla(int init_bit) {
    if (width_ >= kMaxWordBits) {
        throw RevError(ErrorCode::TooLarge, "circuit wider than 64 wires");
    }
    ancilla_init_.push_back(init_bit ? 1 : 0);
    return width_++;
}

void Circuit::append(const PrimitiveGate &gate, std::vector<int> wires) {
    if ((int)wires.size() != gate.arity()) {
        throw RevError(ErrorCode::ArityMismatch, gate.name() + " needs " + std::to_string(gate.arity()) + " wires");
    }
    for (std::size_t i = 0; i < wires.size(); i++) {
        if (wires[i] < 0 || wires[i] >= width_) {
            throw RevError(ErrorCode::WidthMismatch, "wire " + std::to_string(wires[i] + 1) + " out of range");
        }
        for (std::size_t j = 0; j < i; j++) {
            if (wires[i] == wires[j]) {
                throw RevError(ErrorCode::BadParameter, "wire " + std::to_string(wires[i] + 1) + " repeated in " +
                                                            gate.name());
            }
        }
    }
    ops_.push_back(Op{gate, std::move(wires)});
}

void Circuit::append_mapped(const Circuit &sub, const std::vector<int> &wires) {
    if ((int)wires.size() != sub.width()) {
        throw RevError(ErrorCode::WidthMismatch, "wire map does not cover the sub-circuit");
    }
    for (const Op &op : sub.ops()) {
        std::vector<int> w;
        w.reserve(op.wires.size());
        for (int v : op.wires) {
            w.push_back(wires[v]);
        }
        append(op.gate, std::move(w));
    }
}

void Circuit::x(int w) {
    append(PrimitiveGate::named(PrimitiveKind::Not), {w});
}
void Circuit::xx(int a, int b) {
    append(PrimitiveGate::named(PrimitiveKind::NotNot), {a, b});
}
void Circuit::cx(int c, int t) {
    append(PrimitiveGate::named(PrimitiveKind::Cnot), {c, t});
}
void Circuit::cxx(int c, int t1, int t2) {
    append(PrimitiveGate::named(PrimitiveKind::CnotNot), {c, t1, t2});
}
void Circuit::ccx(int c1, int c2, int t) {
    append(PrimitiveGate::named(PrimitiveKind::Toffoli), {c1, c2, t});
}
void Circuit::cswap(int c, int a, int b) {
    append(PrimitiveGate::named(PrimitiveKind::Fredkin), {c, a, b});
}
void Circuit::swap(int a, int b) {
    append(PrimitiveGate::named(PrimitiveKind::Swap), {a, b});
}

Word Circuit::initial_word(Word data) const {
    Word x = data << ancilla_count();
    for (int i = 0; i < ancilla_count(); i++) {
        if (ancilla_init_[i]) {
            x |= basis_word(width_, data_ + i);
        }
    }
    return x;
}

Word apply_op(const Op &op, int width, Word x) {
    Word s = 0;
    for (int w : op.wires) {
        s = (s << 1) | static_cast<Word>(get_wire(x, width, w));
    }
    Word out = op.gate.table()(s);
    int a = static_cast<int>(op.wires.size());
    for (int i = 0; i < a; i++) {
        x = set_wire(x, width, op.wires[i], get_wire(out, a, i));
    }
    return x;
}

Word simulate(const Circuit &c, Word x) {
    if (x > low_mask(c.width())) {
        throw RevError(ErrorCode::WidthMismatch, "input wider than the circuit");
    }
    for (const Op &op : c.ops()) {
        x = apply_op(op, c.width(), x);
    }
    return x;
}

namespace {

void check_budget(const Circuit &c) {
    if (c.data_wires() < 1) {
        throw RevError(ErrorCode::BadParameter, "circuit has no data wires");
    }
    if (c.width() > kEnumerationBudget) {
        throw RevError(ErrorCode::TooLarge, "width " + std::to_string(c.width()) +
                                                " exceeds the exhaustive enumeration budget of " +
                                                std::to_string(kEnumerationBudget));
    }
}

}  // namespace

Gate realized_transformation(const Circuit &c, AncillaRule rule) {
    check_budget(c);
    int d = c.data_wires();
    int a = c.ancilla_count();
    Word amask = low_mask(a);
    std::vector<std::uint32_t> t(std::size_t{1} << d);
    Word first_pattern = 0;
    for (Word x = 0; x < t.size(); x++) {
        Word y = simulate(c, c.initial_word(x));
        Word pattern = y & amask;
        if (rule == AncillaRule::Strict) {
            Word expected = c.initial_word(0) & amask;
            if (pattern != expected) {
                int w = d + a - 1 - std::countr_zero(pattern ^ expected);
                throw RevError(ErrorCode::AncillaNotRestored,
                               "ancilla wire " + std::to_string(w + 1) + " not restored on input " + to_bit_string(x, d));
            }
        } else if (x == 0) {
            first_pattern = pattern;
        } else if (pattern != first_pattern) {
            throw RevError(ErrorCode::AncillaInputDependent,
                           "final ancilla state depends on the input (first seen at " + to_bit_string(x, d) + ")");
        }
        t[x] = static_cast<std::uint32_t>(y >> a);
    }
    try {
        return Gate::from_table(d, std::move(t));
    } catch (const RevError &) {
        throw RevError(ErrorCode::NotBijective, "circuit does not act bijectively on the data wires");
    }
}

VerificationReport verify(const Circuit &c, const Gate &target, AncillaRule rule) {
    if (target.arity() != c.data_wires()) {
        throw RevError(ErrorCode::ArityMismatch, "target arity differs from the circuit's data width");
    }
    check_budget(c);
    VerificationReport r;
    r.gate_count = c.ops().size();
    r.ancilla_count = c.ancilla_count();
    int d = c.data_wires();
    int a = c.ancilla_count();
    Word init = c.initial_word(0) & low_mask(a);
    Word first_pattern = 0;
    for (Word x = 0; x < target.size(); x++) {
        Word y = simulate(c, c.initial_word(x));
        Word pattern = y & low_mask(a);
        Word reference = init;
        if (rule == AncillaRule::Loose) {
            if (x == 0) {
                first_pattern = pattern;
            }
            reference = first_pattern;
        }
        for (int i = 0; i < a; i++) {
            int bit = get_wire(pattern, a, i);
            if (bit != get_wire(reference, a, i)) {
                r.ancilla_violations.push_back({x, d + i, bit});
            }
        }
        Word out = y >> a;
        if (out != target(x)) {
            r.mismatches.push_back({x, target(x), out});
        }
    }
    r.implements_target = r.ancilla_violations.empty() && r.mismatches.empty();
    return r;
}

std::string VerificationReport::str(int data_wires) const {
    std::ostringstream out;
    out << (implements_target ? "OK" : "FAILED") << ": " << gate_count << " gates, " << ancilla_count
        << " ancillas\n";
    for (const auto &m : mismatches) {
        out << "  mismatch on " << to_bit_string(m.input, data_wires) << ": expected "
            << to_bit_string(m.expected, data_wires) << ", got " << to_bit_string(m.observed, data_wires) << "\n";
    }
    for (const auto &v : ancilla_violations) {
        out << "  ancilla wire " << v.wire + 1 << " ends as " << v.observed << " on input "
            << to_bit_string(v.input, data_wires) << "\n";
    }
    return out.str();
}

Circuit invert(const Circuit &c) {
    Circuit out(c.data_wires());
    for (int init : c.ancilla_inits()) {
        out.add_ancilla(init);
    }
    for (auto it = c.ops().rbegin(); it != c.ops().rend(); ++it) {
        out.append(it->gate.inverse(), it->wires);
    }
    return out;
}

Circuit concatenate(const Circuit &a, const Circuit &b) {
    if (a.width() != b.width() || a.data_wires() != b.data_wires()) {
        throw RevError(ErrorCode::WidthMismatch, "circuits have different shapes");
    }
    if (a.ancilla_inits() != b.ancilla_inits()) {
        throw RevError(ErrorCode::AncillaConflict, "ancilla initial values differ");
    }
    Circuit out = a;
    for (const Op &op : b.ops()) {
        out.append(op.gate, op.wires);
    }
    return out;
}

CircuitStats stats(const Circuit &c) {
    CircuitStats s;
    s.gate_count = c.ops().size();
    s.ancilla_count = c.ancilla_count();
    std::vector<int> level(c.width(), 0);
    for (const Op &op : c.ops()) {
        int l = 0;
        for (int w : op.wires) {
            l = std::max(l, level[w]);
        }
        for (int w : op.wires) {
            level[w] = l + 1;
        }
        s.depth = std::max(s.depth, l + 1);
    }
    return s;
}

}  // namespace revlattice
