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

#include "revlattice/sampling.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "revlattice/error.h"
#include "revlattice/named_gates.h"

namespace revlattice {

namespace {

// Shuffles inputs within each bucket so that bucket(g(x)) == bucket(x).
Gate shuffle_within(int n, const std::function<int(Word)> &bucket, std::mt19937_64 &rng) {
    std::size_t m = std::size_t{1} << n;
    std::map<int, std::vector<std::uint32_t>> groups;
    for (std::size_t x = 0; x < m; x++) {
        groups[bucket(x)].push_back(static_cast<std::uint32_t>(x));
    }
    std::vector<std::uint32_t> t(m);
    for (auto &[key, xs] : groups) {
        std::vector<std::uint32_t> ys = xs;
        std::shuffle(ys.begin(), ys.end(), rng);
        for (std::size_t i = 0; i < xs.size(); i++) {
            t[xs[i]] = ys[i];
        }
    }
    return Gate::from_table(n, std::move(t));
}

Word random_word(int n, std::mt19937_64 &rng) {
    return std::uniform_int_distribution<Word>(0, low_mask(n))(rng);
}

Word random_even_word(int n, std::mt19937_64 &rng) {
    while (true) {
        Word b = random_word(n, rng);
        if (weight(b) % 2 == 0) {
            return b;
        }
    }
}

Gf2Matrix random_permutation_matrix(int n, std::mt19937_64 &rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Gf2Matrix a(n);
    for (int j = 0; j < n; j++) {
        a.set_column(j, basis_word(n, p[j]));
    }
    return a;
}

}  // namespace

Gf2Matrix random_odd_column_matrix(int n, std::mt19937_64 &rng) {
    while (true) {
        std::vector<Word> cols(n);
        for (auto &c : cols) {
            do {
                c = random_word(n, rng);
            } while (weight(c) % 2 == 0);
        }
        Gf2Matrix a(n, std::move(cols));
        if (a.invertible()) {
            return a;
        }
    }
}

AffineForm random_isometry(int n, int gate_width, bool complemented, std::mt19937_64 &rng) {
    std::vector<Word> rows = Gf2Matrix::identity(n).rows();
    Word offset = 0;
    if (n >= gate_width) {
        std::vector<int> wires(n);
        std::iota(wires.begin(), wires.end(), 0);
        int steps = 3 * n * n;
        for (int s = 0; s < steps; s++) {
            std::shuffle(wires.begin(), wires.end(), rng);
            Word sum = 0;
            int sc = complemented ? 1 : 0;
            for (int i = 0; i < gate_width; i++) {
                sum ^= rows[wires[i]];
                sc ^= get_wire(offset, n, wires[i]);
            }
            for (int i = 0; i < gate_width; i++) {
                rows[wires[i]] ^= sum;
                if (sc) {
                    offset ^= basis_word(n, wires[i]);
                }
            }
        }
    }
    // A final wire permutation applied to rows and offset together.
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<Word> permuted(n);
    for (int i = 0; i < n; i++) {
        permuted[p[i]] = rows[i];
    }
    return AffineForm{Gf2Matrix::from_rows(n, permuted), permute_wires(offset, n, p)};
}

Gate random_member(const GateClass &c, int n, std::mt19937_64 &rng) {
    if (n < 1 || n > 16) {
        throw RevError(ErrorCode::BadParameter, "sampling supports 1 <= n <= 16");
    }
    switch (c.kind()) {
        case ClassKind::All:
            return shuffle_within(n, [](Word) { return 0; }, rng);
        case ClassKind::Fredkin:
            return shuffle_within(n, [](Word x) { return weight(x); }, rng);
        case ClassKind::Mod: {
            int k = c.modulus();
            return shuffle_within(n, [k](Word x) { return weight(x) % k; }, rng);
        }
        case ClassKind::FredkinNot: {
            Gate g = shuffle_within(n, [](Word x) { return weight(x) % 2; }, rng);
            if (std::bernoulli_distribution(0.5)(rng)) {
                std::vector<std::uint32_t> t = g.table();
                for (auto &v : t) {
                    v ^= static_cast<std::uint32_t>(basis_word(n, 0));
                }
                g = Gate::from_table(n, std::move(t));
            }
            return g;
        }
        case ClassKind::Cnot:
            return AffineForm{random_invertible_matrix(n, rng), random_word(n, rng)}.to_gate();
        case ClassKind::CnotNot:
            return AffineForm{random_odd_column_matrix(n, rng), random_even_word(n, rng)}.to_gate();
        case ClassKind::CnotNotNot:
            return AffineForm{random_odd_column_matrix(n, rng), random_word(n, rng)}.to_gate();
        case ClassKind::F4:
            return random_isometry(n, 4, true, rng).to_gate();
        case ClassKind::T4:
        case ClassKind::T6:
        case ClassKind::T4Not:
        case ClassKind::T6Not:
        case ClassKind::T4NotNot:
        case ClassKind::T6NotNot: {
            bool t4 = c.kind() == ClassKind::T4 || c.kind() == ClassKind::T4Not || c.kind() == ClassKind::T4NotNot;
            AffineForm af = random_isometry(n, t4 ? 4 : 6, false, rng);
            if (c.kind() == ClassKind::T4Not || c.kind() == ClassKind::T6Not) {
                af.offset = random_word(n, rng);
            } else if (c.kind() == ClassKind::T4NotNot || c.kind() == ClassKind::T6NotNot) {
                af.offset = random_even_word(n, rng);
            }
            return af.to_gate();
        }
        case ClassKind::Not:
            return AffineForm{random_permutation_matrix(n, rng), random_word(n, rng)}.to_gate();
        case ClassKind::NotNot:
            return AffineForm{random_permutation_matrix(n, rng), random_even_word(n, rng)}.to_gate();
        case ClassKind::Trivial:
            return AffineForm{random_permutation_matrix(n, rng), 0}.to_gate();
    }
    throw RevError(ErrorCode::BadParameter, "unknown class");
}

}  // namespace revlattice
