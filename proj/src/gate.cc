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

#include "revlattice/gate.h"

#include <numeric>
#include <string>

#include "revlattice/error.h"

namespace revlattice {

namespace {

void check_arity(int arity, int cap) {
    if (arity < 1) {
        throw RevError(ErrorCode::ArityMismatch, "gate arity must be at least 1");
    }
    if (arity > cap || arity > 32) {
        throw RevError(ErrorCode::ArityTooLarge, "arity " + std::to_string(arity) + " exceeds the cap " +
                                                     std::to_string(cap));
    }
}

}  // namespace

Gate Gate::from_table(int arity, std::vector<std::uint32_t> table, int arity_cap) {
    check_arity(arity, arity_cap);
    std::size_t m = std::size_t{1} << arity;
    if (table.size() != m) {
        throw RevError(ErrorCode::MissingRow, "expected " + std::to_string(m) + " table entries, got " +
                                                  std::to_string(table.size()));
    }
    std::vector<char> seen(m, 0);
    for (std::size_t x = 0; x < m; x++) {
        if (table[x] >= m) {
            throw RevError(ErrorCode::ArityMismatch, "output of row " + to_bit_string(x, arity) + " is too wide");
        }
        if (seen[table[x]]) {
            throw RevError(ErrorCode::NotBijective, "output " + to_bit_string(table[x], arity) + " repeated");
        }
        seen[table[x]] = 1;
    }
    Gate g;
    g.n_ = arity;
    g.table_ = std::move(table);
    return g;
}

Gate Gate::from_rows(int arity, const std::vector<std::pair<Word, Word>> &rows, int arity_cap) {
    check_arity(arity, arity_cap);
    std::size_t m = std::size_t{1} << arity;
    std::vector<std::uint32_t> table(m, 0);
    std::vector<char> have(m, 0);
    for (const auto &[in, out] : rows) {
        if (in >= m || out >= m) {
            throw RevError(ErrorCode::ArityMismatch, "row wider than " + std::to_string(arity) + " bits");
        }
        if (have[in]) {
            throw RevError(ErrorCode::DuplicateRow, "input " + to_bit_string(in, arity) + " listed twice");
        }
        have[in] = 1;
        table[in] = static_cast<std::uint32_t>(out);
    }
    for (std::size_t x = 0; x < m; x++) {
        if (!have[x]) {
            throw RevError(ErrorCode::MissingRow, "input " + to_bit_string(x, arity) + " missing");
        }
    }
    return from_table(arity, std::move(table), arity_cap);
}

Gate Gate::identity(int arity) {
    check_arity(arity, kDefaultArityCap);
    std::vector<std::uint32_t> t(std::size_t{1} << arity);
    std::iota(t.begin(), t.end(), 0u);
    Gate g;
    g.n_ = arity;
    g.table_ = std::move(t);
    return g;
}

Word Gate::apply(Word x) const {
    if (x >= table_.size()) {
        throw RevError(ErrorCode::ArityMismatch, "input wider than " + std::to_string(n_) + " bits");
    }
    return table_[x];
}

bool Gate::is_identity() const {
    for (std::size_t x = 0; x < table_.size(); x++) {
        if (table_[x] != x) {
            return false;
        }
    }
    return true;
}

Gate compose(const Gate &g, const Gate &h) {
    if (g.arity() != h.arity()) {
        throw RevError(ErrorCode::ArityMismatch, "compose needs equal arities");
    }
    std::vector<std::uint32_t> t(g.size());
    for (std::size_t x = 0; x < t.size(); x++) {
        t[x] = g.table()[h.table()[x]];
    }
    return Gate::from_table(g.arity(), std::move(t));
}

Gate inverse(const Gate &g) {
    std::vector<std::uint32_t> t(g.size());
    for (std::size_t x = 0; x < t.size(); x++) {
        t[g.table()[x]] = static_cast<std::uint32_t>(x);
    }
    return Gate::from_table(g.arity(), std::move(t));
}

Gate tensor(const Gate &g, const Gate &h) {
    int b = h.arity();
    int n = g.arity() + b;
    if (n > kDefaultArityCap) {
        throw RevError(ErrorCode::ArityTooLarge, "tensor product too wide");
    }
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    for (std::size_t x = 0; x < t.size(); x++) {
        Word hi = x >> b;
        Word lo = x & low_mask(b);
        t[x] = static_cast<std::uint32_t>((g(hi) << b) | h(lo));
    }
    return Gate::from_table(n, std::move(t));
}

Word permute_wires(Word x, int n, const std::vector<int> &perm) {
    Word y = 0;
    for (int i = 0; i < n; i++) {
        if (get_wire(x, n, i)) {
            y |= basis_word(n, perm[i]);
        }
    }
    return y;
}

Gate rewire(const Gate &g, const std::vector<int> &in_perm, const std::vector<int> &out_perm) {
    int n = g.arity();
    auto check = [n](const std::vector<int> &p) {
        if ((int)p.size() != n) {
            throw RevError(ErrorCode::ArityMismatch, "wire permutation has wrong length");
        }
        std::vector<char> seen(n, 0);
        for (int v : p) {
            if (v < 0 || v >= n || seen[v]) {
                throw RevError(ErrorCode::BadParameter, "not a wire permutation");
            }
            seen[v] = 1;
        }
    };
    check(in_perm);
    check(out_perm);
    std::vector<std::uint32_t> t(g.size());
    for (std::size_t x = 0; x < t.size(); x++) {
        t[x] = static_cast<std::uint32_t>(permute_wires(g(permute_wires(x, n, in_perm)), n, out_perm));
    }
    return Gate::from_table(n, std::move(t));
}

Gate dual(const Gate &g) {
    int n = g.arity();
    std::vector<std::uint32_t> t(g.size());
    for (std::size_t x = 0; x < t.size(); x++) {
        t[x] = static_cast<std::uint32_t>(complement(g(complement(x, n)), n));
    }
    return Gate::from_table(n, std::move(t));
}

std::vector<int> WeightProfile::deltas() const {
    std::vector<int> out;
    for (int d = -arity; d <= arity; d++) {
        if (multiplicity[d + arity]) {
            out.push_back(d);
        }
    }
    return out;
}

WeightProfile weight_deltas(const Gate &g) {
    WeightProfile w;
    w.arity = g.arity();
    w.multiplicity.assign(2 * w.arity + 1, 0);
    for (std::size_t x = 0; x < g.size(); x++) {
        w.multiplicity[weight(g(x)) - weight(x) + w.arity]++;
    }
    return w;
}

RespectingNumber respecting_number(const WeightProfile &w) {
    std::vector<int> d = w.deltas();
    int k = 0;
    for (int v : d) {
        k = std::gcd(k, v - d.front());
    }
    return k == 0 ? RespectingNumber::infinite() : RespectingNumber::finite(k);
}

RespectingNumber respecting_number(const Gate &g) {
    return respecting_number(weight_deltas(g));
}

Gate AffineForm::to_gate() const {
    int n = arity();
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    for (std::size_t x = 0; x < t.size(); x++) {
        t[x] = static_cast<std::uint32_t>(apply(x));
    }
    return Gate::from_table(n, std::move(t));
}

std::optional<AffineForm> affine_form(const Gate &g) {
    int n = g.arity();
    Word b = g(0);
    std::vector<Word> cols(n);
    for (int i = 0; i < n; i++) {
        cols[i] = g(basis_word(n, i)) ^ b;
    }
    // Walk the inputs in Gray-code order so each step adds one column.
    Word x = 0;
    Word y = b;
    for (std::size_t step = 1; step < g.size(); step++) {
        int bit = std::countr_zero(step);
        x ^= Word{1} << bit;
        y ^= cols[n - 1 - bit];
        if (g(x) != y) {
            return std::nullopt;
        }
    }
    AffineForm f{Gf2Matrix(n, std::move(cols)), b};
    return f;
}

InvariantSignature signature(const Gate &g) {
    InvariantSignature s;
    s.arity = g.arity();
    WeightProfile w = weight_deltas(g);
    std::vector<int> d = w.deltas();
    s.deltas = d;
    s.respecting = respecting_number(w);
    s.conservative = s.respecting.is_infinite();
    s.parity_preserving = true;
    s.parity_flipping = true;
    s.mod4_preserving = true;
    for (int v : d) {
        if (v % 2 != 0) {
            s.parity_preserving = false;
        } else {
            s.parity_flipping = false;
        }
        if (v % 4 != 0) {
            s.mod4_preserving = false;
        }
    }
    s.affine = affine_form(g);
    if (s.affine) {
        const Gf2Matrix &a = s.affine->matrix;
        s.linear = s.affine->offset == 0;
        s.degenerate = a.is_permutation();
        s.orthogonal = a.is_orthogonal();
        s.odd_columns = true;
        bool cols_mod4 = true;
        for (Word c : a.columns()) {
            if (weight(c) % 2 == 0) {
                s.odd_columns = false;
            }
            if (weight(c) % 4 != 1) {
                cols_mod4 = false;
            }
        }
        s.linear_part_mod4 = s.orthogonal && cols_mod4;
        s.trivial = s.degenerate && s.linear;
    }
    return s;
}

bool preserves_inner_product(const Gate &g, int k) {
    if (k < 2) {
        throw RevError(ErrorCode::BadParameter, "modulus must be at least 2");
    }
    for (std::size_t x = 0; x < g.size(); x++) {
        for (std::size_t y = x; y < g.size(); y++) {
            if ((dot(g(x), g(y)) - dot(x, y)) % k != 0) {
                return false;
            }
        }
    }
    return true;
}

bool preserves_weight_mod(const Gate &g, int k) {
    for (std::size_t x = 0; x < g.size(); x++) {
        if ((weight(g(x)) - weight(x)) % k != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace revlattice
