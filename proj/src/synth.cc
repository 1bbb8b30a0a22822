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

#include "revlattice/synth.h"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "revlattice/error.h"
#include "revlattice/named_gates.h"

namespace revlattice {

namespace {

std::vector<int> iota_wires(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; i++) {
        w[i] = i;
    }
    return w;
}

bool contains_wire(const std::vector<int> &ws, int w) {
    return std::find(ws.begin(), ws.end(), w) != ws.end();
}

// Pairs (y, z), y < z, whose product in circuit order equals f.
std::vector<std::pair<Word, Word>> transposition_sequence(const Gate &f) {
    std::vector<std::uint32_t> cur = f.table();
    std::vector<std::uint32_t> where(cur.size());
    for (std::size_t x = 0; x < cur.size(); x++) {
        where[cur[x]] = static_cast<std::uint32_t>(x);
    }
    std::vector<std::pair<Word, Word>> taus;
    for (std::size_t x = 0; x < cur.size(); x++) {
        Word y = cur[x];
        if (y == x) {
            continue;
        }
        // Left-multiply by the transposition of x and y.
        std::uint32_t px = where[x];
        cur[px] = static_cast<std::uint32_t>(y);
        where[y] = px;
        cur[x] = static_cast<std::uint32_t>(x);
        where[x] = static_cast<std::uint32_t>(x);
        taus.emplace_back(x, y);
    }
    std::reverse(taus.begin(), taus.end());
    return taus;
}

// dest[i] = wire receiving wire i, when f only permutes wires.
std::optional<std::vector<int>> wire_permutation_of(const Gate &f) {
    auto af = affine_form(f);
    if (!af || af->offset != 0 || !af->matrix.is_permutation()) {
        return std::nullopt;
    }
    int n = f.arity();
    std::vector<int> dest(n);
    for (int j = 0; j < n; j++) {
        dest[j] = n - 1 - std::countr_zero(af->matrix.column(j));
    }
    return dest;
}

Circuit permutation_circuit(int n, const std::vector<int> &dest) {
    Circuit c(n);
    append_wire_permutation(c, dest);
    return c;
}

// Toffoli-only construction of w-CNOT gates. NOT and CNOT use two wires
// held at 1.
class ToffoliBuilder {
   public:
    ToffoliBuilder(Circuit &c, int one1, int one2) : c_(c), one1_(one1), one2_(one2) {
    }

    void x(int w) {
        c_.ccx(one1_, one2_, w);
    }
    void cx(int ctl, int t) {
        c_.ccx(one1_, ctl, t);
    }

    // Flips target iff every control is 1. Borrows one uninvolved wire in
    // whatever state it is in and restores it.
    void mcx(const std::vector<int> &controls, int target) {
        std::size_t m = controls.size();
        if (m == 0) {
            x(target);
            return;
        }
        if (m == 1) {
            cx(controls[0], target);
            return;
        }
        if (m == 2) {
            c_.ccx(controls[0], controls[1], target);
            return;
        }
        std::size_t h = (m + 1) / 2;
        std::vector<int> a(controls.begin(), controls.begin() + h);
        std::vector<int> b(controls.begin() + h, controls.end());
        int r = borrow(controls, target);
        b.push_back(r);
        for (int rep = 0; rep < 2; rep++) {
            mcx(a, r);
            mcx(b, target);
        }
    }

    // Flips target iff control i equals bit i of w (control 0 is the most
    // significant bit).
    void wcx(const std::vector<int> &controls, Word w, int target) {
        int n = static_cast<int>(controls.size());
        for (int i = 0; i < n; i++) {
            if (!get_wire(w, n, i)) {
                x(controls[i]);
            }
        }
        mcx(controls, target);
        for (int i = 0; i < n; i++) {
            if (!get_wire(w, n, i)) {
                x(controls[i]);
            }
        }
    }

   private:
    int borrow(const std::vector<int> &controls, int target) const {
        for (int w = 0; w < c_.width(); w++) {
            if (w != target && !contains_wire(controls, w)) {
                return w;
            }
        }
        throw RevError(ErrorCode::PreconditionViolated, "no wire to borrow");
    }

    Circuit &c_;
    int one1_;
    int one2_;
};

struct Rail {
    int p;
    int q;
    bool operator==(const Rail &) const = default;
};

// Fredkin-only construction of w-CSWAP gates on dual-rail registers.
// Registers in `regs` must hold complementary bits whenever they are
// borrowed; z0 is a clean 0.
class FredkinBuilder {
   public:
    using FredkinEmitter = std::function<void(int, int, int)>;

    FredkinBuilder(Circuit &c, int z0, std::vector<Rail> regs, FredkinEmitter fredkin)
        : c_(c), z0_(z0), regs_(std::move(regs)), fredkin_(std::move(fredkin)) {
    }

    void fredkin(int ctl, int a, int b) {
        fredkin_(ctl, a, b);
    }

    // Swaps (a, b) iff ctl == positive. A 0-control is a Fredkin followed by
    // an unconditional swap.
    void cswap(int ctl, bool positive, int a, int b) {
        fredkin_(ctl, a, b);
        if (!positive) {
            c_.swap(a, b);
        }
    }

    // Swaps t iff c1 == pos1 and c2 == 1.
    void ccswap(int c1, bool pos1, int c2, Rail t) {
        cswap(c1, pos1, c2, z0_);
        fredkin_(z0_, t.p, t.q);
        cswap(c1, pos1, c2, z0_);
    }

    // Swaps t iff control i equals pattern[i] for every i.
    void mcswap(const std::vector<int> &controls, const std::vector<bool> &pattern, Rail t) {
        std::size_t m = controls.size();
        if (m == 0) {
            c_.swap(t.p, t.q);
            return;
        }
        if (m == 1) {
            cswap(controls[0], pattern[0], t.p, t.q);
            return;
        }
        if (m == 2 && (pattern[0] || pattern[1])) {
            int first = pattern[1] ? 0 : 1;
            ccswap(controls[first], pattern[first], controls[1 - first], t);
            return;
        }
        Rail r = borrow(controls, t);
        std::vector<int> head(controls.begin(), controls.end() - 1);
        std::vector<bool> head_pattern(pattern.begin(), pattern.end() - 1);
        for (int rep = 0; rep < 2; rep++) {
            mcswap(head, head_pattern, r);
            ccswap(controls.back(), pattern.back(), r.p, t);
        }
    }

    void wcswap(const std::vector<int> &controls, Word w, Rail t) {
        int n = static_cast<int>(controls.size());
        std::vector<bool> pattern(n);
        for (int i = 0; i < n; i++) {
            pattern[i] = get_wire(w, n, i) != 0;
        }
        mcswap(controls, pattern, t);
    }

   private:
    Rail borrow(const std::vector<int> &controls, Rail t) const {
        for (const Rail &r : regs_) {
            if (r.p == t.p || r.p == t.q || r.q == t.p || r.q == t.q) {
                continue;
            }
            if (contains_wire(controls, r.p) || contains_wire(controls, r.q)) {
                continue;
            }
            return r;
        }
        throw RevError(ErrorCode::PreconditionViolated, "no dual-rail register to borrow");
    }

    Circuit &c_;
    int z0_;
    std::vector<Rail> regs_;
    FredkinEmitter fredkin_;
};

// Emits C_k on the given wires.
using CkEmitter = std::function<void(const std::vector<int> &)>;

// Controlled C_k on ys using a clean (0, 1) register.
void emit_cck(FredkinBuilder &fb, Circuit &c, const CkEmitter &ck, int ctl, const std::vector<int> &ys, Rail reg) {
    auto route = [&] {
        fb.fredkin(ctl, ys[0], reg.p);
        fb.fredkin(ctl, ys[1], reg.q);
        c.swap(ys[0], reg.p);
        c.swap(ys[1], reg.q);
    };
    route();
    ck(ys);
    route();
}

// Transposition of y and z (|y| == |z| mod k, or equal weights when k == 0)
// using flag register rt and scratch register r1.
void emit_cswap_transposition(FredkinBuilder &fb, Circuit &c, int n, Word y, Word z, Rail rt, Rail r1, int k,
                              const CkEmitter &ck) {
    std::vector<int> xs = iota_wires(n);
    fb.wcswap(xs, y, rt);
    fb.wcswap(xs, z, rt);
    std::vector<int> from;
    std::vector<int> to;
    for (int i = 0; i < n; i++) {
        int yi = get_wire(y, n, i);
        int zi = get_wire(z, n, i);
        if (yi && !zi) {
            from.push_back(i);
        } else if (zi && !yi) {
            to.push_back(i);
        }
    }
    std::size_t paired = std::min(from.size(), to.size());
    for (std::size_t t = 0; t < paired; t++) {
        fb.fredkin(rt.p, from[t], to[t]);
    }
    const std::vector<int> &surplus = from.size() > paired ? from : to;
    std::size_t extra = surplus.size() - paired;
    if (extra > 0) {
        if (k == 0 || extra % k != 0) {
            throw RevError(ErrorCode::PreconditionViolated, "weight surplus is not a multiple of the modulus");
        }
        for (std::size_t s = paired; s < surplus.size(); s += k) {
            std::vector<int> block(surplus.begin() + s, surplus.begin() + s + k);
            emit_cck(fb, c, ck, rt.p, block, r1);
        }
    }
    fb.wcswap(xs, z, rt);
    fb.wcswap(xs, y, rt);
}

// Transposition decomposition over Fredkin-family gates. k == 0 means
// conservative targets.
Circuit cswap_family_circuit(const Gate &f, int k, const std::function<void(Circuit &, int, int, int)> &fredkin,
                             const std::function<void(Circuit &, const std::vector<int> &)> &ck, int ones) {
    int n = f.arity();
    Circuit c(n);
    Rail rt{c.add_ancilla(0), c.add_ancilla(1)};
    Rail r1{c.add_ancilla(0), c.add_ancilla(1)};
    int z0 = c.add_ancilla(0);
    std::vector<int> one_wires;
    for (int i = 0; i < ones; i++) {
        one_wires.push_back(c.add_ancilla(1));
    }
    auto emit_f = [&](int x, int a, int b) { fredkin(c, x, a, b); };
    auto emit_ck = [&](const std::vector<int> &ws) { ck(c, ws); };
    FredkinBuilder fb(c, z0, {rt, r1}, emit_f);
    for (const auto &[y, z] : transposition_sequence(f)) {
        emit_cswap_transposition(fb, c, n, y, z, rt, r1, k, emit_ck);
    }
    return drop_idle_ancillas(c);
}

void emit_ck_op(Circuit &c, const std::vector<int> &ws) {
    c.append(PrimitiveGate::named(PrimitiveKind::Ck, static_cast<int>(ws.size())), ws);
}

// C_2 as NOTNOT (or two NOTs) followed by a swap.
void emit_c2(Circuit &c, const std::vector<int> &ws, bool bare_nots) {
    if (bare_nots) {
        c.x(ws[0]);
        c.x(ws[1]);
    } else {
        c.xx(ws[0], ws[1]);
    }
    c.swap(ws[0], ws[1]);
}

void emit_plain_fredkin(Circuit &c, int x, int a, int b) {
    c.cswap(x, a, b);
}

Circuit parity_core(const Gate &f, bool bare_nots) {
    return cswap_family_circuit(
        f, 2, emit_plain_fredkin, [bare_nots](Circuit &c, const std::vector<int> &ws) { emit_c2(c, ws, bare_nots); },
        0);
}

// Wires 0..n-1 become data and wire n an ancilla initialized to `init`.
Circuit demote_last_data_wire(const Circuit &c, int init) {
    int n = c.data_wires() - 1;
    Circuit out(n);
    out.add_ancilla(init);
    for (int w = c.data_wires(); w < c.width(); w++) {
        out.add_ancilla(c.ancilla_init(w));
    }
    for (const Op &op : c.ops()) {
        out.append(op.gate, op.wires);
    }
    return out;
}

}  // namespace

void append_wire_permutation(Circuit &c, const std::vector<int> &dest) {
    int n = static_cast<int>(dest.size());
    // want[w] = source wire whose value must end on wire w.
    std::vector<int> want(n);
    for (int i = 0; i < n; i++) {
        want[dest[i]] = i;
    }
    std::vector<int> content = iota_wires(n);
    for (int w = 0; w < n; w++) {
        if (content[w] == want[w]) {
            continue;
        }
        int u = w + 1;
        while (content[u] != want[w]) {
            u++;
        }
        c.swap(w, u);
        std::swap(content[w], content[u]);
    }
}

Circuit drop_idle_ancillas(const Circuit &c) {
    std::vector<char> used(c.width(), 0);
    for (const Op &op : c.ops()) {
        for (int w : op.wires) {
            used[w] = 1;
        }
    }
    Circuit out(c.data_wires());
    std::vector<int> map(c.width(), -1);
    for (int w = 0; w < c.width(); w++) {
        if (w < c.data_wires()) {
            map[w] = w;
        } else if (used[w]) {
            map[w] = out.add_ancilla(c.ancilla_init(w));
        }
    }
    for (const Op &op : c.ops()) {
        std::vector<int> ws;
        for (int w : op.wires) {
            ws.push_back(map[w]);
        }
        out.append(op.gate, std::move(ws));
    }
    return out;
}

Circuit multi_controlled_not(int n, Word w) {
    if (n < 2) {
        throw RevError(ErrorCode::ArityTooSmall, "w-CNOT needs at least 2 controls");
    }
    Circuit c(n + 1);
    int one1 = -1;
    int one2 = -1;
    if (weight(w) < n) {
        one1 = c.add_ancilla(1);
        one2 = c.add_ancilla(1);
    } else if (n >= 3) {
        c.add_ancilla(0);
    }
    ToffoliBuilder tb(c, one1, one2);
    tb.wcx(iota_wires(n), w, n);
    return c;
}

Circuit synth_all(const Gate &f) {
    int n = f.arity();
    if (auto dest = wire_permutation_of(f)) {
        return permutation_circuit(n, *dest);
    }
    Circuit c(n);
    int one1 = c.add_ancilla(1);
    int one2 = c.add_ancilla(1);
    int a = c.add_ancilla(1);
    ToffoliBuilder tb(c, one1, one2);
    std::vector<int> xs = iota_wires(n);
    for (const auto &[y, z] : transposition_sequence(f)) {
        tb.wcx(xs, y, a);
        tb.wcx(xs, z, a);
        Word diff = y ^ z;
        for (int i = 0; i < n; i++) {
            if (get_wire(diff, n, i)) {
                tb.x(i);
            }
        }
        for (int i = 0; i < n; i++) {
            if (get_wire(diff, n, i)) {
                tb.cx(a, i);
            }
        }
        tb.wcx(xs, z, a);
        tb.wcx(xs, y, a);
    }
    return drop_idle_ancillas(c);
}

Circuit multi_controlled_swap(int n, Word w) {
    if (n < 1) {
        throw RevError(ErrorCode::ArityTooSmall, "w-CSWAP needs at least 1 control");
    }
    Circuit c(n + 2);
    int z0 = c.add_ancilla(0);
    Rail r1{c.add_ancilla(0), c.add_ancilla(1)};
    Rail r2{c.add_ancilla(0), c.add_ancilla(1)};
    FredkinBuilder fb(c, z0, {r1, r2}, [&c](int x, int a, int b) { c.cswap(x, a, b); });
    fb.wcswap(iota_wires(n), w, Rail{n, n + 1});
    return drop_idle_ancillas(c);
}

Circuit synth_conservative(const Gate &f) {
    if (!signature(f).conservative) {
        throw RevError(ErrorCode::NotInClass, "target changes some Hamming weight");
    }
    if (auto dest = wire_permutation_of(f)) {
        return permutation_circuit(f.arity(), *dest);
    }
    return cswap_family_circuit(
        f, 0, emit_plain_fredkin, [](Circuit &, const std::vector<int> &) {}, 0);
}

Circuit build_cck(int k) {
    if (k < 2) {
        throw RevError(ErrorCode::BadParameter, "controlled C_k needs k >= 2");
    }
    Circuit c(k + 1);
    Rail reg{c.add_ancilla(0), c.add_ancilla(1)};
    FredkinBuilder fb(c, -1, {}, [&c](int x, int a, int b) { c.cswap(x, a, b); });
    std::vector<int> ys;
    for (int i = 1; i <= k; i++) {
        ys.push_back(i);
    }
    emit_cck(fb, c, [&c, k](const std::vector<int> &ws) { k == 2 ? emit_c2(c, ws, false) : emit_ck_op(c, ws); }, 0,
             ys, reg);
    return c;
}

Circuit fredkin_from_ck(int k) {
    if (k < 3) {
        throw RevError(ErrorCode::BadParameter, "Fredkin from C_k needs k >= 3");
    }
    Circuit c(3);
    std::vector<int> ones;
    for (int i = 0; i < k - 2; i++) {
        ones.push_back(c.add_ancilla(1));
    }
    auto with_ones = [&ones](int a, int b) {
        std::vector<int> ws{a, b};
        ws.insert(ws.end(), ones.begin(), ones.end());
        return ws;
    };
    emit_ck_op(c, with_ones(0, 1));
    emit_ck_op(c, with_ones(0, 2));
    emit_ck_op(c, with_ones(0, 1));
    return c;
}

Circuit synth_modk(const Gate &f, int k) {
    if (k < 3) {
        throw RevError(ErrorCode::BadParameter, "synth_modk needs k >= 3");
    }
    if (!preserves_weight_mod(f, k)) {
        throw RevError(ErrorCode::NotInClass, "target is not mod-" + std::to_string(k) + "-preserving");
    }
    int n = f.arity();
    if (n == k && f == ck_gate(k)) {
        Circuit c(n);
        emit_ck_op(c, iota_wires(n));
        return c;
    }
    if (auto dest = wire_permutation_of(f)) {
        return permutation_circuit(n, *dest);
    }
    // The k-2 ones sit on the last ancillas; the Fredkin emitter finds them
    // through the circuit width.
    auto fredkin = [k](Circuit &c, int x, int a, int b) {
        std::vector<int> ones;
        for (int w = c.width() - (k - 2); w < c.width(); w++) {
            ones.push_back(w);
        }
        for (int t : {a, b, a}) {
            std::vector<int> ws{x, t};
            ws.insert(ws.end(), ones.begin(), ones.end());
            emit_ck_op(c, ws);
        }
    };
    return cswap_family_circuit(f, k, fredkin, emit_ck_op, k - 2);
}

Circuit synth_parity(const Gate &f, bool flipping) {
    InvariantSignature s = signature(f);
    int n = f.arity();
    if (!s.parity_preserving && !(flipping && s.parity_flipping)) {
        throw RevError(ErrorCode::NotInClass,
                       flipping ? "target is not parity-respecting" : "target is not parity-preserving");
    }
    if (!flipping && n == 2 && f == notnot_gate()) {
        Circuit c(2);
        c.xx(0, 1);
        return c;
    }
    if (s.affine && s.degenerate) {
        Circuit c(n);
        std::vector<int> dest(n);
        for (int j = 0; j < n; j++) {
            dest[j] = n - 1 - std::countr_zero(s.affine->matrix.column(j));
        }
        append_wire_permutation(c, dest);
        std::vector<int> flips;
        for (int i = 0; i < n; i++) {
            if (get_wire(s.affine->offset, n, i)) {
                flips.push_back(i);
            }
        }
        if (flipping) {
            for (int w : flips) {
                c.x(w);
            }
        } else {
            for (std::size_t i = 0; i + 1 < flips.size(); i += 2) {
                c.xx(flips[i], flips[i + 1]);
            }
        }
        return c;
    }
    if (!s.parity_preserving) {
        // Extend by a NOT on a fresh wire, which makes the target
        // parity-preserving; then undo that NOT and hold the wire at 0.
        Circuit wide = parity_core(tensor(f, not_gate()), true);
        wide.x(n);
        return demote_last_data_wire(wide, 0);
    }
    return parity_core(f, flipping);
}

}  // namespace revlattice
