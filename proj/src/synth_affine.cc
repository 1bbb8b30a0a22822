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

#include <algorithm>
#include <string>

#include "revlattice/error.h"
#include "revlattice/named_gates.h"
#include "revlattice/synth.h"

namespace revlattice {

namespace {

// Row operations recorded as (control, targets...) applications.
struct RowOp {
    int control;
    std::vector<int> targets;
};

void check_square(const Gf2Matrix &a, int max_n = kEnumerationBudget) {
    if (a.size() < 1 || a.size() > max_n) {
        throw RevError(ErrorCode::ArityMismatch, "matrix size out of range");
    }
}

std::vector<int> bits_of(Word b, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; i++) {
        if (get_wire(b, n, i)) {
            out.push_back(i);
        }
    }
    return out;
}

// dest[j] = row holding the single 1 of column j.
std::vector<int> permutation_dest(const Gf2Matrix &p) {
    int n = p.size();
    std::vector<int> dest(n);
    for (int j = 0; j < n; j++) {
        dest[j] = n - 1 - std::countr_zero(p.column(j));
    }
    return dest;
}

// Reduces rows to a permutation matrix with CNOTNOT-style row operations;
// returns the operations in the order they were applied to the rows.
std::vector<RowOp> reduce_odd_columns(std::vector<Word> &rows, int n) {
    std::vector<RowOp> ops;
    std::vector<char> pivoted(n, 0);
    for (int j = 0; j < n; j++) {
        Word m = basis_word(n, j);
        int r = -1;
        for (int i = 0; i < n; i++) {
            if (!pivoted[i] && (rows[i] & m)) {
                r = i;
                break;
            }
        }
        if (r < 0) {
            throw RevError(ErrorCode::Singular, "matrix is not invertible");
        }
        std::vector<int> others;
        for (int i = 0; i < n; i++) {
            if (i != r && (rows[i] & m)) {
                others.push_back(i);
            }
        }
        for (std::size_t t = 0; t + 1 < others.size(); t += 2) {
            rows[others[t]] ^= rows[r];
            rows[others[t + 1]] ^= rows[r];
            ops.push_back({r, {others[t], others[t + 1]}});
        }
        pivoted[r] = 1;
    }
    return ops;
}

void check_odd_columns(const Gf2Matrix &a) {
    for (Word c : a.columns()) {
        if (weight(c) % 2 == 0) {
            throw RevError(ErrorCode::NotInClass, "linear part has an even-weight column");
        }
    }
    if (!a.invertible()) {
        throw RevError(ErrorCode::Singular, "matrix is not invertible");
    }
}

// Linear part over CNOTNOT: permutation first, then the reversed row ops.
Circuit odd_column_linear(const Gf2Matrix &a) {
    int n = a.size();
    std::vector<Word> rows = a.rows();
    std::vector<RowOp> ops = reduce_odd_columns(rows, n);
    Circuit c(n);
    append_wire_permutation(c, permutation_dest(Gf2Matrix::from_rows(n, rows)));
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        c.cxx(it->control, it->targets[0], it->targets[1]);
    }
    return c;
}

PrimitiveGate isometry_gate(IsometryFlavor flavor) {
    switch (flavor) {
        case IsometryFlavor::F4:
            return PrimitiveGate::named(PrimitiveKind::Fk, 4);
        case IsometryFlavor::T4:
            return PrimitiveGate::named(PrimitiveKind::Tk, 4);
        case IsometryFlavor::T6:
            return PrimitiveGate::named(PrimitiveKind::Tk, 6);
    }
    throw RevError(ErrorCode::BadParameter, "unknown flavor");
}

void append_offset_nots(Circuit &c, Word b, int n) {
    for (int w : bits_of(b, n)) {
        c.x(w);
    }
}

void append_offset_notnots(Circuit &c, Word b, int n) {
    std::vector<int> w = bits_of(b, n);
    if (w.size() % 2 != 0) {
        throw RevError(ErrorCode::NotInClass, "offset has odd weight");
    }
    for (std::size_t i = 0; i < w.size(); i += 2) {
        c.xx(w[i], w[i + 1]);
    }
}

Circuit degenerate_circuit(const AffineForm &af, bool pairs) {
    int n = af.arity();
    Circuit c(n);
    append_wire_permutation(c, permutation_dest(af.matrix));
    if (pairs) {
        append_offset_notnots(c, af.offset, n);
    } else {
        append_offset_nots(c, af.offset, n);
    }
    return c;
}

Circuit check_and_finish(Circuit c, const Gate &target, const SynthesisOptions &opt, const GateClass &over) {
    if (opt.verify) {
        VerificationReport r = verify(c, target);
        if (!r.implements_target) {
            throw RevError(ErrorCode::VerificationFailed, "synthesized circuit over " + over.name() +
                                                              " does not implement the target");
        }
    }
    int budget = opt.ancilla_budget >= 0 ? opt.ancilla_budget : ancilla_ceiling(over);
    if (c.ancilla_count() > budget) {
        throw RevError(ErrorCode::VerificationFailed, "circuit uses " + std::to_string(c.ancilla_count()) +
                                                          " ancillas, budget is " + std::to_string(budget));
    }
    return c;
}

}  // namespace

Circuit synth_affine(const Gf2Matrix &a, Word b) {
    check_square(a);
    int n = a.size();
    std::vector<Word> rows = a.rows();
    std::vector<RowOp> ops;
    for (int j = 0; j < n; j++) {
        Word m = basis_word(n, j);
        if (!(rows[j] & m)) {
            int p = -1;
            for (int i = j + 1; i < n; i++) {
                if (rows[i] & m) {
                    p = i;
                    break;
                }
            }
            if (p < 0) {
                throw RevError(ErrorCode::Singular, "matrix is not invertible");
            }
            rows[j] ^= rows[p];
            ops.push_back({p, {j}});
        }
        for (int i = 0; i < n; i++) {
            if (i != j && (rows[i] & m)) {
                rows[i] ^= rows[j];
                ops.push_back({j, {i}});
            }
        }
    }
    Circuit c(n);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        c.cx(it->control, it->targets[0]);
    }
    if (b != 0) {
        int one = c.add_ancilla(1);
        for (int w : bits_of(b, n)) {
            c.cx(one, w);
        }
    }
    return c;
}

Circuit synth_pp_affine(const Gf2Matrix &a, Word b) {
    check_square(a);
    check_odd_columns(a);
    int n = a.size();
    if (weight(b) % 2 != 0) {
        throw RevError(ErrorCode::NotInClass, "offset has odd weight");
    }
    Circuit c = odd_column_linear(a);
    if (b != 0) {
        int one = c.add_ancilla(1);
        std::vector<int> w = bits_of(b, n);
        for (std::size_t i = 0; i < w.size(); i += 2) {
            c.cxx(one, w[i], w[i + 1]);
        }
    }
    return c;
}

Circuit synth_pr_affine(const Gf2Matrix &a, Word b) {
    check_square(a);
    check_odd_columns(a);
    Circuit c = odd_column_linear(a);
    append_offset_nots(c, b, a.size());
    return c;
}

Circuit synth_isometry(const Gf2Matrix &a, Word b, IsometryFlavor flavor) {
    check_square(a);
    int n = a.size();
    if (!a.is_orthogonal()) {
        throw RevError(ErrorCode::NotInClass, "linear part is not orthogonal");
    }
    if (flavor == IsometryFlavor::T4 || flavor == IsometryFlavor::T6) {
        if (b != 0) {
            throw RevError(ErrorCode::FlavorMismatch, "T flavors need a linear target");
        }
    }
    if (flavor == IsometryFlavor::T6) {
        for (Word col : a.columns()) {
            if (weight(col) % 4 != 1) {
                throw RevError(ErrorCode::NotInClass, "column weight is not 1 mod 4");
            }
        }
    }
    if (flavor == IsometryFlavor::F4) {
        AffineForm af{a, b};
        if (!preserves_weight_mod(af.to_gate(), 4)) {
            throw RevError(ErrorCode::NotInClass, "target is not mod-4-preserving");
        }
    }
    int width = flavor == IsometryFlavor::T6 ? 6 : 4;
    int hits = width - 1;
    bool complemented = flavor == IsometryFlavor::F4;

    std::vector<Word> rows = a.rows();
    std::vector<int> cst(n);
    for (int i = 0; i < n; i++) {
        cst[i] = get_wire(b, n, i);
    }
    std::vector<char> row_active(n, 1);
    std::vector<char> var_active(n, 1);
    std::vector<int> dest(n, -1);
    std::vector<std::vector<int>> applied;

    auto occurrences = [&](int v) {
        std::vector<int> occ;
        Word m = basis_word(n, v);
        for (int r = 0; r < n; r++) {
            if (row_active[r] && (rows[r] & m)) {
                occ.push_back(r);
            }
        }
        return occ;
    };
    int active_rows = n;
    while (active_rows > 0) {
        bool peeled = false;
        for (int v = 0; v < n && !peeled; v++) {
            if (!var_active[v]) {
                continue;
            }
            std::vector<int> occ = occurrences(v);
            if (occ.size() == 1) {
                int r = occ[0];
                if (rows[r] != basis_word(n, v) || cst[r]) {
                    throw RevError(ErrorCode::VerificationFailed, "elimination reached a row with extra terms");
                }
                dest[v] = r;
                row_active[r] = 0;
                var_active[v] = 0;
                active_rows--;
                peeled = true;
            }
        }
        if (peeled) {
            continue;
        }
        int v = -1;
        std::vector<int> occ;
        for (int u = 0; u < n; u++) {
            if (!var_active[u]) {
                continue;
            }
            occ = occurrences(u);
            if ((int)occ.size() < active_rows && (int)occ.size() >= hits) {
                v = u;
                break;
            }
        }
        if (v < 0) {
            throw RevError(ErrorCode::VerificationFailed, "no variable eligible for elimination");
        }
        std::vector<int> ws(occ.begin(), occ.begin() + hits);
        Word m = basis_word(n, v);
        for (int r = 0; r < n; r++) {
            if (row_active[r] && !(rows[r] & m)) {
                ws.push_back(r);
                break;
            }
        }
        std::sort(ws.begin(), ws.end());
        Word s = 0;
        int sc = complemented ? 1 : 0;
        for (int r : ws) {
            s ^= rows[r];
            sc ^= cst[r];
        }
        for (int r : ws) {
            rows[r] ^= s;
            cst[r] ^= sc;
        }
        applied.push_back(ws);
    }
    Circuit c(n);
    append_wire_permutation(c, dest);
    PrimitiveGate g = isometry_gate(flavor);
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        c.append(g, *it);
    }
    return c;
}

Circuit t_reduce(int m) {
    if (m < 4 || m % 2 != 0) {
        throw RevError(ErrorCode::BadParameter, "t_reduce needs an even m >= 4");
    }
    int target = m % 4 == 2 ? 6 : 4;
    if (m < target) {
        throw RevError(ErrorCode::BadParameter, "T_" + std::to_string(m) + " has no smaller T gate to reach");
    }
    PrimitiveGate tm = PrimitiveGate::named(PrimitiveKind::Tk, m);
    Circuit c(target);
    if (m == target) {
        std::vector<int> ws;
        for (int i = 0; i < target; i++) {
            ws.push_back(i);
        }
        c.append(tm, ws);
        return c;
    }
    int pad = m - target;
    int half = pad / 2;
    std::vector<int> p;
    std::vector<int> stash;
    for (int i = 0; i < pad; i++) {
        p.push_back(c.add_ancilla(0));
    }
    for (int i = 0; i < half; i++) {
        stash.push_back(c.add_ancilla(0));
    }
    std::vector<int> ws = p;
    for (int i = 0; i < target; i++) {
        ws.push_back(i);
    }
    // Every T_m sees the parity of the data since the pad weight stays even.
    // Rotating each half of the pad through the stash between applications
    // returns the pad to 0 while the data is complemented an odd number of
    // times when the parity is 1.
    c.append(tm, ws);
    for (int i = 0; i < half; i++) {
        c.swap(p[i], stash[i]);
    }
    c.append(tm, ws);
    for (int i = 0; i < half; i++) {
        c.swap(p[half + i], stash[i]);
    }
    c.append(tm, ws);
    return c;
}

int ancilla_ceiling(const GateClass &c) {
    switch (c.kind()) {
        case ClassKind::All:
            return 3;
        case ClassKind::Fredkin:
            return 5;
        case ClassKind::Mod:
            return c.modulus() + 3;
        case ClassKind::FredkinNot:
            return 6;
        case ClassKind::Cnot:
        case ClassKind::CnotNot:
            return 1;
        default:
            return 0;
    }
}

Circuit synthesize(const Gate &target, const GateClass &over) {
    return synthesize(SynthesisRequest{target, over, {}});
}

Circuit synthesize(const SynthesisRequest &req) {
    const Gate &f = req.target;
    InvariantSignature s = signature(f);
    std::string why = separating_invariant(req.over, s);
    if (!why.empty()) {
        throw RevError(ErrorCode::NotInClass, "target is not " + why + ", so it is outside " + req.over.name());
    }
    Circuit c;
    switch (req.over.kind()) {
        case ClassKind::All:
            c = synth_all(f);
            break;
        case ClassKind::Fredkin:
            c = synth_conservative(f);
            break;
        case ClassKind::Mod:
            c = req.over.modulus() == 2 ? synth_parity(f, false) : synth_modk(f, req.over.modulus());
            break;
        case ClassKind::FredkinNot:
            c = synth_parity(f, true);
            break;
        case ClassKind::Cnot:
            c = synth_affine(s.affine->matrix, s.affine->offset);
            break;
        case ClassKind::CnotNot:
            c = synth_pp_affine(s.affine->matrix, s.affine->offset);
            break;
        case ClassKind::CnotNotNot:
            c = synth_pr_affine(s.affine->matrix, s.affine->offset);
            break;
        case ClassKind::F4:
            c = synth_isometry(s.affine->matrix, s.affine->offset, IsometryFlavor::F4);
            break;
        case ClassKind::T4:
        case ClassKind::T6:
            c = synth_isometry(s.affine->matrix, 0,
                               req.over.kind() == ClassKind::T4 ? IsometryFlavor::T4 : IsometryFlavor::T6);
            break;
        case ClassKind::T4Not:
        case ClassKind::T4NotNot:
        case ClassKind::T6Not:
        case ClassKind::T6NotNot: {
            bool t4 = req.over.kind() == ClassKind::T4Not || req.over.kind() == ClassKind::T4NotNot;
            c = synth_isometry(s.affine->matrix, 0, t4 ? IsometryFlavor::T4 : IsometryFlavor::T6);
            int n = f.arity();
            if (req.over.kind() == ClassKind::T4Not || req.over.kind() == ClassKind::T6Not) {
                append_offset_nots(c, s.affine->offset, n);
            } else {
                append_offset_notnots(c, s.affine->offset, n);
            }
            break;
        }
        case ClassKind::Not:
            c = degenerate_circuit(*s.affine, false);
            break;
        case ClassKind::NotNot:
            c = degenerate_circuit(*s.affine, true);
            break;
        case ClassKind::Trivial:
            c = degenerate_circuit(*s.affine, false);
            break;
    }
    return check_and_finish(std::move(c), f, req.options, req.over);
}

}  // namespace revlattice
