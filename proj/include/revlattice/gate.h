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

#ifndef REVLATTICE_GATE_H
#define REVLATTICE_GATE_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "revlattice/gf2.h"
#include "revlattice/word.h"

namespace revlattice {

inline constexpr int kDefaultArityCap = 24;

/// An n-bit reversible gate stored as its permutation truth table.
class Gate {
   public:
    Gate() = default;

    /// Validates that `table` is a bijection of {0,1}^arity.
    static Gate from_table(int arity, std::vector<std::uint32_t> table, int arity_cap = kDefaultArityCap);
    /// Builds a gate from explicit (input, output) rows, checking for
    /// duplicated or missing inputs before checking bijectivity.
    static Gate from_rows(int arity, const std::vector<std::pair<Word, Word>> &rows, int arity_cap = kDefaultArityCap);
    static Gate identity(int arity);

    int arity() const {
        return n_;
    }
    std::size_t size() const {
        return table_.size();
    }
    const std::vector<std::uint32_t> &table() const {
        return table_;
    }
    /// Unchecked lookup.
    Word operator()(Word x) const {
        return table_[x];
    }
    /// Checked lookup; throws ArityMismatch when x has bits above the arity.
    Word apply(Word x) const;

    bool is_identity() const;
    bool operator==(const Gate &other) const = default;

   private:
    int n_ = 0;
    std::vector<std::uint32_t> table_;
};

/// x -> g(h(x)).
Gate compose(const Gate &g, const Gate &h);
Gate inverse(const Gate &g);
/// g acts on the leading wires, h on the trailing ones.
Gate tensor(const Gate &g, const Gate &h);
/// Returns x -> P_out(g(P_in(x))) where P_s moves wire i to wire s[i].
Gate rewire(const Gate &g, const std::vector<int> &in_perm, const std::vector<int> &out_perm);
/// Moves wire i of x to wire perm[i].
Word permute_wires(Word x, int n, const std::vector<int> &perm);
/// x -> complement(g(complement(x))).
Gate dual(const Gate &g);

struct WeightProfile {
    int arity = 0;
    /// multiplicity[d + arity] counts inputs with |g(x)| - |x| == d.
    std::vector<std::uint64_t> multiplicity;

    std::vector<int> deltas() const;
    std::uint64_t count(int delta) const {
        return multiplicity[delta + arity];
    }
};

WeightProfile weight_deltas(const Gate &g);

/// Largest k with all weight deltas congruent mod k; infinite for
/// conservative gates.
class RespectingNumber {
   public:
    static RespectingNumber infinite() {
        return RespectingNumber(0);
    }
    static RespectingNumber finite(int k) {
        return RespectingNumber(k);
    }
    bool is_infinite() const {
        return k_ == 0;
    }
    int value() const {
        return k_;
    }
    /// True iff the gate is mod-l-respecting, i.e. l divides k.
    bool respects(int l) const {
        return is_infinite() || k_ % l == 0;
    }
    bool operator==(const RespectingNumber &) const = default;

   private:
    explicit RespectingNumber(int k) : k_(k) {
    }
    int k_;
};

RespectingNumber respecting_number(const WeightProfile &w);
RespectingNumber respecting_number(const Gate &g);

struct AffineForm {
    Gf2Matrix matrix;
    Word offset = 0;

    int arity() const {
        return matrix.size();
    }
    Word apply(Word x) const {
        return matrix.apply(x) ^ offset;
    }
    Gate to_gate() const;
};

/// The affine form of g, if g is affine. Always verified on every input.
std::optional<AffineForm> affine_form(const Gate &g);

struct InvariantSignature {
    int arity = 0;
    bool conservative = false;
    RespectingNumber respecting = RespectingNumber::infinite();
    bool parity_preserving = false;
    bool parity_flipping = false;
    bool mod4_preserving = false;
    std::optional<AffineForm> affine;
    bool linear = false;
    bool degenerate = false;
    bool orthogonal = false;
    /// Orthogonal linear part whose columns all have weight 1 mod 4.
    bool linear_part_mod4 = false;
    /// All columns of the linear part have odd weight.
    bool odd_columns = false;
    bool trivial = false;
    /// The distinct weight deltas, ascending.
    std::vector<int> deltas;

    /// All deltas are multiples of k.
    bool preserves_mod(int k) const {
        for (int d : deltas) {
            if (d % k != 0) {
                return false;
            }
        }
        return true;
    }
    int offset_weight() const {
        return affine ? weight(affine->offset) : -1;
    }
};

InvariantSignature signature(const Gate &g);

/// True iff g(x).g(y) == x.y (mod k) for every pair; exhaustive over 4^n pairs.
bool preserves_inner_product(const Gate &g, int k);

/// |g(x)| == |x| (mod k) for every x.
bool preserves_weight_mod(const Gate &g, int k);

}  // namespace revlattice

#endif
