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

#include "revlattice/props.h"

#include <algorithm>
#include <numeric>

#include "revlattice/census.h"
#include "revlattice/error.h"
#include "revlattice/lattice.h"

namespace revlattice {

namespace {

std::string gate_str(const Gate &g) {
    std::string s = "[";
    for (std::size_t x = 0; x < g.size(); x++) {
        s += (x ? " " : "") + to_bit_string(g(x), g.arity());
    }
    return s + "]";
}

void record(PropertyResult &r, bool ok, const std::string &witness) {
    r.checked++;
    if (!ok) {
        if (r.counterexamples == 0) {
            r.first_counterexample = witness;
        }
        r.counterexamples++;
    }
}

void check_gate_width(int n) {
    if (n < 1 || n > 3) {
        throw RevError(ErrorCode::TooLarge, "exhaustive gate suites support 1 <= n <= 3");
    }
}

void check_matrix_width(int n) {
    if (n < 1 || n > 4) {
        throw RevError(ErrorCode::TooLarge, "exhaustive matrix suites support 1 <= n <= 4");
    }
}

void for_each_affine(int n, const std::function<void(const AffineForm &)> &f) {
    for_each_invertible_matrix(n, [&](const Gf2Matrix &a) {
        for (Word b = 0; b <= low_mask(n); b++) {
            f(AffineForm{a, b});
        }
    });
}

}  // namespace

void for_each_gate(int n, const std::function<void(const Gate &)> &f) {
    check_gate_width(n);
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    std::iota(t.begin(), t.end(), 0u);
    do {
        f(Gate::from_table(n, t));
    } while (std::next_permutation(t.begin(), t.end()));
}

PropertyResult prop_no_mod_shifter(int n) {
    PropertyResult r{"no-mod-shifter", "no gate satisfies |G(x)| = |x| + j (mod k) with j != 0 and 3 <= k <= 6"};
    for_each_gate(n, [&](const Gate &g) {
        std::vector<int> d = weight_deltas(g).deltas();
        for (int k = 3; k <= 6; k++) {
            int j = ((d.front() % k) + k) % k;
            bool constant = std::all_of(d.begin(), d.end(), [&](int v) { return ((v % k) + k) % k == j; });
            record(r, !(constant && j != 0), gate_str(g) + " k=" + std::to_string(k));
        }
    });
    return r;
}

PropertyResult prop_inner_product_mod3(int n) {
    PropertyResult r{"inner-product-mod-3", "non-conservative gates do not preserve inner products mod 3"};
    for_each_gate(n, [&](const Gate &g) {
        if (!signature(g).conservative) {
            record(r, !preserves_inner_product(g, 3), gate_str(g));
        }
    });
    return r;
}

PropertyResult prop_orthogonal_is_linear(int n) {
    PropertyResult r{"orthogonal-is-linear", "gates preserving inner products mod 2 are linear"};
    for_each_gate(n, [&](const Gate &g) {
        if (preserves_inner_product(g, 2)) {
            auto af = affine_form(g);
            record(r, af && af->offset == 0, gate_str(g));
        }
    });
    return r;
}

PropertyResult prop_linear_modulus_2_or_4(int max_n) {
    check_matrix_width(max_n);
    PropertyResult r{"linear-modulus-2-or-4",
                     "no non-permutation invertible matrix preserves weight mod 3, 5 or 6"};
    for (int n = 1; n <= max_n; n++) {
        for_each_invertible_matrix(n, [&](const Gf2Matrix &a) {
            Gate g = AffineForm{a, 0}.to_gate();
            for (int k : {3, 5, 6}) {
                bool preserves = preserves_weight_mod(g, k);
                record(r, !preserves || a.is_permutation(), a.str() + " k=" + std::to_string(k));
            }
        });
    }
    return r;
}

PropertyResult prop_affine_mod4_criterion(int n) {
    check_matrix_width(n);
    PropertyResult r{"affine-mod-4-criterion",
                     "Ax+b preserves weight mod 4 iff |b| = 0 mod 4, |v_i| + 2 v_i.b = |o_i| mod 4 and v_i.v_j even "
                     "for an orthonormal basis o"};
    // The standard basis and, when n >= 4, the columns of T4 extended by the
    // identity, which are also orthonormal.
    std::vector<std::vector<Word>> bases;
    bases.push_back(Gf2Matrix::identity(n).columns());
    if (n >= 4) {
        std::vector<Word> t4;
        Word block = low_mask(4) << (n - 4);
        for (int i = 0; i < n; i++) {
            Word e = basis_word(n, i);
            t4.push_back(i < 4 ? (block ^ e) : e);
        }
        bases.push_back(t4);
    }
    for_each_affine(n, [&](const AffineForm &f) {
        bool direct = preserves_weight_mod(f.to_gate(), 4);
        for (const std::vector<Word> &o : bases) {
            bool crit = weight(f.offset) % 4 == 0;
            std::vector<Word> v(n);
            for (int i = 0; i < n; i++) {
                v[i] = f.matrix.apply(o[i]);
                crit = crit && (weight(v[i]) + 2 * dot(v[i], f.offset) - weight(o[i])) % 4 == 0;
            }
            for (int i = 0; i < n && crit; i++) {
                for (int j = i + 1; j < n; j++) {
                    crit = crit && dot(v[i], v[j]) % 2 == 0;
                }
            }
            record(r, crit == direct, f.matrix.str() + "b=" + to_bit_string(f.offset, n));
        }
    });
    return r;
}

PropertyResult prop_linear_mod4_columns(int n) {
    check_matrix_width(n);
    PropertyResult r{"linear-mod-4-columns",
                     "a linear map preserves weight mod 4 iff it is orthogonal with columns of weight 1 mod 4"};
    for_each_invertible_matrix(n, [&](const Gf2Matrix &a) {
        bool direct = preserves_weight_mod(AffineForm{a, 0}.to_gate(), 4);
        bool cols = std::all_of(a.columns().begin(), a.columns().end(), [](Word c) { return weight(c) % 4 == 1; });
        record(r, direct == (a.is_orthogonal() && cols), a.str());
    });
    return r;
}

PropertyResult prop_characteristic_vector(int n) {
    check_matrix_width(n);
    PropertyResult r{"characteristic-vector", "|c(A)| = 0 mod 4 for every orthogonal A"};
    for_each_invertible_matrix(n, [&](const Gf2Matrix &a) {
        if (a.is_orthogonal()) {
            record(r, weight(characteristic_vector(a)) % 4 == 0, a.str());
        }
    });
    return r;
}

PropertyResult prop_dual_closed(int n) {
    PropertyResult r{"dual-closed", "every gate and its dual generate the same class"};
    for_each_gate(n, [&](const Gate &g) { record(r, classify_gate(g) == classify_gate(dual(g)), gate_str(g)); });
    return r;
}

PropertyResult prop_xor_inclusion_exclusion(int n, int max_t) {
    if (n < 1 || n > 6 || max_t < 1 || max_t > 4) {
        throw RevError(ErrorCode::TooLarge, "inclusion-exclusion check supports n <= 6 and t <= 4");
    }
    PropertyResult r{"xor-inclusion-exclusion",
                     "|v_1 ^ ... ^ v_t| = sum over nonempty S of (-2)^(|S|-1) |AND of v_i, i in S|"};
    Word top = low_mask(n);
    for (int t = 1; t <= max_t; t++) {
        std::vector<Word> v(t, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == t) {
                Word x = 0;
                for (Word w : v) {
                    x ^= w;
                }
                long long sum = 0;
                for (int s = 1; s < (1 << t); s++) {
                    Word meet = top;
                    int size = 0;
                    for (int j = 0; j < t; j++) {
                        if (s & (1 << j)) {
                            meet &= v[j];
                            size++;
                        }
                    }
                    long long coeff = 1;
                    for (int j = 1; j < size; j++) {
                        coeff *= -2;
                    }
                    sum += coeff * weight(meet);
                }
                record(r, sum == weight(x), "t=" + std::to_string(t));
                return;
            }
            for (Word w = 0; w <= top; w++) {
                v[i] = w;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return r;
}

PropertyResult prop_respecting_gcd(int n) {
    PropertyResult r{"respecting-gcd",
                     "the gcd of d - d_min over weight deltas d is the largest k with all deltas congruent mod k"};
    for_each_gate(n, [&](const Gate &g) {
        std::vector<int> d = weight_deltas(g).deltas();
        int best = 0;
        for (int k = 1; k <= 2 * n; k++) {
            bool same = std::all_of(d.begin(), d.end(), [&](int v) { return (v - d.front()) % k == 0; });
            if (same) {
                best = k;
            }
        }
        // All deltas equal means conservative, which the gcd form reports
        // as infinite.
        bool conservative = d.size() == 1;
        RespectingNumber k = respecting_number(g);
        record(r, conservative ? k.is_infinite() : (!k.is_infinite() && k.value() == best), gate_str(g));
    });
    return r;
}

std::vector<PropertyResult> run_property_suite(int n) {
    check_matrix_width(n);
    int gn = std::min(n, 3);
    return {
        prop_no_mod_shifter(gn),       prop_inner_product_mod3(gn),  prop_orthogonal_is_linear(gn),
        prop_linear_modulus_2_or_4(n), prop_affine_mod4_criterion(n), prop_linear_mod4_columns(n),
        prop_characteristic_vector(n), prop_dual_closed(gn),          prop_xor_inclusion_exclusion(gn),
        prop_respecting_gcd(gn),
    };
}

}  // namespace revlattice
