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

#include "revlattice/named_gates.h"

#include <string>

#include "revlattice/error.h"

namespace revlattice {

namespace {

template <typename F>
Gate tabulate(int n, F f) {
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    for (std::size_t x = 0; x < t.size(); x++) {
        t[x] = static_cast<std::uint32_t>(f(static_cast<Word>(x)));
    }
    return Gate::from_table(n, std::move(t));
}

void check_even(int k, const char *name) {
    if (k < 2 || k % 2 != 0) {
        throw RevError(ErrorCode::BadParameter, std::string(name) + " needs an even k >= 2");
    }
}

}  // namespace

Gate not_gate() {
    return tabulate(1, [](Word x) { return x ^ 1; });
}

Gate notnot_gate() {
    return tabulate(2, [](Word x) { return x ^ 3; });
}

Gate cnot_gate() {
    return tabulate(2, [](Word x) { return (x & 2) ? x ^ 1 : x; });
}

Gate cnotnot_gate() {
    return tabulate(3, [](Word x) { return (x & 4) ? x ^ 3 : x; });
}

Gate toffoli_gate() {
    return tabulate(3, [](Word x) { return (x & 6) == 6 ? x ^ 1 : x; });
}

Gate fredkin_gate() {
    return tabulate(3, [](Word x) {
        if ((x & 4) && (((x >> 1) ^ x) & 1)) {
            return x ^ 3;
        }
        return x;
    });
}

Gate swap_gate() {
    return tabulate(2, [](Word x) { return ((x & 1) << 1) | ((x >> 1) & 1); });
}

Gate ccswap_gate() {
    return tabulate(4, [](Word x) {
        if ((x & 12) == 12 && (((x >> 1) ^ x) & 1)) {
            return x ^ 3;
        }
        return x;
    });
}

Gate ck_gate(int k) {
    if (k < 1) {
        throw RevError(ErrorCode::BadParameter, "C_k needs k >= 1");
    }
    Word ones = low_mask(k);
    return tabulate(k, [ones](Word x) {
        if (x == 0) {
            return ones;
        }
        if (x == ones) {
            return Word{0};
        }
        return x;
    });
}

Gate tk_gate(int k) {
    check_even(k, "T_k");
    return tabulate(k, [k](Word x) { return (weight(x) & 1) ? complement(x, k) : x; });
}

Gate fk_gate(int k) {
    check_even(k, "F_k");
    return tabulate(k, [k](Word x) { return (weight(x) & 1) ? x : complement(x, k); });
}

Gate transposition_gate(int n, Word y, Word z) {
    return tabulate(n, [y, z](Word x) {
        if (x == y) {
            return z;
        }
        if (x == z) {
            return y;
        }
        return x;
    });
}

}  // namespace revlattice
