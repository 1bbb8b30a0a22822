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

#include <gtest/gtest.h>

#include <random>

#include "revlattice/error.h"
#include "revlattice/named_gates.h"
#include "revlattice/sampling.h"
#include "revlattice/synth.h"

namespace revlattice {
namespace {

int count_kind(const Circuit &c, PrimitiveKind k) {
    int n = 0;
    for (const Op &op : c.ops()) {
        if (op.gate.kind() == k) {
            n++;
        }
    }
    return n;
}

bool implements(const Circuit &c, const Gate &g) {
    return verify(c, g).implements_target;
}

// Every gate in c is one of the allowed kinds.
bool only_uses(const Circuit &c, std::initializer_list<PrimitiveKind> kinds) {
    for (const Op &op : c.ops()) {
        bool ok = op.gate.kind() == PrimitiveKind::Swap;
        for (PrimitiveKind k : kinds) {
            ok = ok || op.gate.kind() == k;
        }
        if (!ok) {
            return false;
        }
    }
    return true;
}

TEST(MultiControlledNot, BaseCaseIsOneToffoli) {
    Circuit c = multi_controlled_not(2, 0b11);
    EXPECT_EQ(c.ops().size(), 1u);
    EXPECT_EQ(c.ancilla_count(), 0);
    EXPECT_TRUE(implements(c, toffoli_gate()));
}

TEST(MultiControlledNot, ThreeControlsUseFourToffolis) {
    Circuit c = multi_controlled_not(3, 0b111);
    EXPECT_EQ(c.ops().size(), 4u);
    EXPECT_EQ(c.ancilla_count(), 1);
    EXPECT_EQ(count_kind(c, PrimitiveKind::Toffoli), 4);
}

TEST(MultiControlledNot, RealizesEveryPattern) {
    for (int n = 2; n <= 5; n++) {
        for (Word w = 0; w < (Word{1} << n); w++) {
            Circuit c = multi_controlled_not(n, w);
            std::vector<std::uint32_t> t(std::size_t{1} << (n + 1));
            for (Word x = 0; x < t.size(); x++) {
                t[x] = static_cast<std::uint32_t>((x >> 1) == w ? x ^ 1 : x);
            }
            EXPECT_TRUE(implements(c, Gate::from_table(n + 1, t))) << "n=" << n << " w=" << w;
            EXPECT_LE(c.ancilla_count(), 2);
            EXPECT_TRUE(only_uses(c, {PrimitiveKind::Toffoli}));
        }
    }
}

TEST(MultiControlledNot, RejectsSingleControl) {
    try {
        multi_controlled_not(1, 1);
        FAIL();
    } catch (const RevError &e) {
        EXPECT_EQ(e.code(), ErrorCode::ArityTooSmall);
    }
}

TEST(SynthAll, IdentityIsEmpty) {
    Circuit c = synth_all(Gate::identity(3));
    EXPECT_TRUE(c.ops().empty());
    EXPECT_EQ(c.ancilla_count(), 0);
}

TEST(SynthAll, TranspositionFromTheToffoliRecipe) {
    Gate t = transposition_gate(3, 0b011, 0b101);
    Circuit c = synth_all(t);
    EXPECT_TRUE(implements(c, t));
    EXPECT_EQ(c.ancilla_count(), 3);
    EXPECT_TRUE(only_uses(c, {PrimitiveKind::Toffoli}));
    // Four 3-control blocks of 4 Toffolis, two pattern NOTs around each of
    // the 011 and 101 blocks, and a flip layer of 2 NOTs and 2 CNOTs.
    EXPECT_EQ(c.ops().size(), 4u * 4 + 4 * 2 + 4);
}

TEST(SynthAll, RandomPermutations) {
    std::mt19937_64 rng(kDefaultSeed);
    for (int n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 30; trial++) {
            Gate f = random_member(ClassKind::All, n, rng);
            Circuit c = synth_all(f);
            ASSERT_TRUE(implements(c, f));
            EXPECT_LE(c.ancilla_count(), 3);
        }
    }
}

TEST(MultiControlledSwap, SingleControlIsOneFredkin) {
    Circuit c = multi_controlled_swap(1, 1);
    EXPECT_EQ(c.ops().size(), 1u);
    EXPECT_TRUE(implements(c, fredkin_gate()));
}

TEST(MultiControlledSwap, TwoControlsIsCcswap) {
    Circuit c = multi_controlled_swap(2, 0b11);
    EXPECT_EQ(c.ops().size(), 3u);
    EXPECT_EQ(c.ancilla_count(), 1);
    EXPECT_TRUE(implements(c, ccswap_gate()));
}

TEST(MultiControlledSwap, RealizesEveryPatternWithoutNots) {
    for (int n = 1; n <= 4; n++) {
        for (Word w = 0; w < (Word{1} << n); w++) {
            Circuit c = multi_controlled_swap(n, w);
            std::vector<std::uint32_t> t(std::size_t{1} << (n + 2));
            for (Word x = 0; x < t.size(); x++) {
                Word y = x;
                if ((x >> 2) == w && ((x & 1) != ((x >> 1) & 1))) {
                    y ^= 0b11;
                }
                t[x] = static_cast<std::uint32_t>(y);
            }
            EXPECT_TRUE(implements(c, Gate::from_table(n + 2, t))) << "n=" << n << " w=" << w;
            EXPECT_TRUE(only_uses(c, {PrimitiveKind::Fredkin}));
            EXPECT_LE(c.ancilla_count(), 5);
        }
    }
}

TEST(SynthConservative, RotationIsSwapsOnly) {
    std::vector<std::uint32_t> t(8);
    for (Word x = 0; x < 8; x++) {
        t[x] = static_cast<std::uint32_t>(((x & 1) << 2) | (x >> 1));
    }
    Gate rot = Gate::from_table(3, t);
    Circuit c = synth_conservative(rot);
    EXPECT_TRUE(implements(c, rot));
    EXPECT_EQ(count_kind(c, PrimitiveKind::Swap), static_cast<int>(c.ops().size()));
    EXPECT_EQ(c.ancilla_count(), 0);
}

TEST(SynthConservative, EqualWeightTransposition) {
    Gate t = transposition_gate(4, 0b0011, 0b0101);
    Circuit c = synth_conservative(t);
    EXPECT_TRUE(implements(c, t));
    EXPECT_LE(c.ancilla_count(), 5);
    EXPECT_TRUE(only_uses(c, {PrimitiveKind::Fredkin}));
}

TEST(SynthConservative, RejectsToffoli) {
    try {
        synth_conservative(toffoli_gate());
        FAIL();
    } catch (const RevError &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInClass);
    }
}

TEST(SynthConservative, RandomMembers) {
    std::mt19937_64 rng(kDefaultSeed + 1);
    for (int n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 20; trial++) {
            Gate f = random_member(ClassKind::Fredkin, n, rng);
            Circuit c = synth_conservative(f);
            ASSERT_TRUE(implements(c, f));
            EXPECT_LE(c.ancilla_count(), 5);
        }
    }
}

TEST(BuildCck, FredkinFromC3) {
    Circuit c = fredkin_from_ck(3);
    EXPECT_EQ(c.ops().size(), 3u);
    EXPECT_EQ(c.ancilla_count(), 1);
    EXPECT_EQ(c.ancilla_init(3), 1);
    EXPECT_TRUE(implements(c, fredkin_gate()));
}

Gate controlled(const Gate &g) {
    int n = g.arity();
    std::vector<std::uint32_t> t(std::size_t{2} << n);
    for (Word x = 0; x < t.size(); x++) {
        bool on = (x >> n) & 1;
        Word low = x & low_mask(n);
        t[x] = static_cast<std::uint32_t>(on ? ((Word{1} << n) | g(low)) : x);
    }
    return Gate::from_table(n + 1, t);
}

TEST(BuildCck, ControlledCk) {
    for (int k = 2; k <= 5; k++) {
        Circuit c = build_cck(k);
        EXPECT_EQ(c.ancilla_count(), 2);
        EXPECT_TRUE(implements(c, controlled(ck_gate(k)))) << "k=" << k;
    }
    EXPECT_EQ(count_kind(build_cck(2), PrimitiveKind::NotNot), 1);
}

TEST(SynthModk, C3IsOneGate) {
    Circuit c = synth_modk(ck_gate(3), 3);
    EXPECT_EQ(c.ops().size(), 1u);
}

TEST(SynthModk, RandomMembers) {
    std::mt19937_64 rng(kDefaultSeed + 2);
    for (int k = 3; k <= 4; k++) {
        for (int n = 1; n <= 4; n++) {
            for (int trial = 0; trial < 10; trial++) {
                Gate f = random_member(GateClass::mod(k), n, rng);
                Circuit c = synth_modk(f, k);
                ASSERT_TRUE(implements(c, f));
                EXPECT_LE(c.ancilla_count(), k + 3);
                EXPECT_TRUE(only_uses(c, {PrimitiveKind::Ck}));
            }
        }
    }
}

TEST(SynthParity, NotNotIsOneGate) {
    Circuit c = synth_parity(notnot_gate(), false);
    EXPECT_EQ(c.ops().size(), 1u);
}

TEST(SynthParity, NotCollapsesToOneNot) {
    Circuit c = synth_parity(not_gate(), true);
    EXPECT_EQ(c.ops().size(), 1u);
    EXPECT_TRUE(implements(c, not_gate()));
}

TEST(SynthParity, RandomMembers) {
    std::mt19937_64 rng(kDefaultSeed + 3);
    for (int n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 10; trial++) {
            Gate f = random_member(GateClass::mod(2), n, rng);
            Circuit c = synth_parity(f, false);
            ASSERT_TRUE(implements(c, f));
            EXPECT_LE(c.ancilla_count(), 5);
            EXPECT_TRUE(only_uses(c, {PrimitiveKind::Fredkin, PrimitiveKind::NotNot}));
            Gate g = random_member(ClassKind::FredkinNot, n, rng);
            Circuit d = synth_parity(g, true);
            ASSERT_TRUE(implements(d, g));
            EXPECT_LE(d.ancilla_count(), 6);
            EXPECT_TRUE(only_uses(d, {PrimitiveKind::Fredkin, PrimitiveKind::Not}));
        }
    }
}

TEST(SynthAffine, IdentityIsEmpty) {
    EXPECT_TRUE(synth_affine(Gf2Matrix::identity(4), 0).ops().empty());
}

TEST(SynthAffine, CnotMatrixIsOneCnot) {
    Circuit c = synth_affine(affine_form(cnot_gate())->matrix, 0);
    ASSERT_EQ(c.ops().size(), 1u);
    EXPECT_EQ(c.ops()[0].gate.kind(), PrimitiveKind::Cnot);
}

TEST(SynthAffine, RandomWithOffset) {
    std::mt19937_64 rng(kDefaultSeed + 4);
    for (int trial = 0; trial < 30; trial++) {
        Gate f = random_member(ClassKind::Cnot, 6, rng);
        auto af = affine_form(f);
        Circuit c = synth_affine(af->matrix, af->offset);
        ASSERT_TRUE(implements(c, f));
        EXPECT_LE(c.ancilla_count(), 1);
        EXPECT_LE(c.ops().size(), 42u);
    }
}

TEST(SynthAffine, SingularMatrixThrows) {
    Gf2Matrix a(2, {0b11, 0b11});
    try {
        synth_affine(a, 0);
        FAIL();
    } catch (const RevError &e) {
        EXPECT_EQ(e.code(), ErrorCode::Singular);
    }
}

TEST(SynthPpAffine, OffsetPairUsesAncilla) {
    Circuit c = synth_pp_affine(Gf2Matrix::identity(2), 0b11);
    EXPECT_EQ(c.ops().size(), 1u);
    EXPECT_EQ(c.ancilla_count(), 1);
    EXPECT_TRUE(implements(c, notnot_gate()));
}

TEST(SynthPpAffine, CnotNotMatrixIsOneGate) {
    Circuit c = synth_pp_affine(affine_form(cnotnot_gate())->matrix, 0);
    ASSERT_EQ(c.ops().size(), 1u);
    EXPECT_EQ(c.ops()[0].gate.kind(), PrimitiveKind::CnotNot);
}

TEST(SynthPrAffine, RandomOddOffsets) {
    std::mt19937_64 rng(kDefaultSeed + 5);
    for (int trial = 0; trial < 30; trial++) {
        Gf2Matrix a = random_odd_column_matrix(5, rng);
        Word b = 0b10110;
        Circuit c = synth_pr_affine(a, b);
        EXPECT_TRUE(implements(c, AffineForm{a, b}.to_gate()));
        EXPECT_EQ(c.ancilla_count(), 0);
        EXPECT_LE(c.ops().size(), 30u);
    }
}

TEST(SynthIsometry, F4IsOneGate) {
    auto af = affine_form(fk_gate(4));
    Circuit c = synth_isometry(af->matrix, af->offset, IsometryFlavor::F4);
    ASSERT_EQ(c.ops().size(), 1u);
    EXPECT_EQ(c.ops()[0].gate.name(), "FK4");
}

TEST(SynthIsometry, RandomT6) {
    std::mt19937_64 rng(kDefaultSeed + 6);
    for (int trial = 0; trial < 30; trial++) {
        AffineForm af = random_isometry(6, 6, false, rng);
        Circuit c = synth_isometry(af.matrix, 0, IsometryFlavor::T6);
        EXPECT_TRUE(implements(c, af.to_gate()));
        EXPECT_EQ(c.ancilla_count(), 0);
    }
}

TEST(SynthIsometry, RandomT4AndF4) {
    std::mt19937_64 rng(kDefaultSeed + 7);
    for (int n = 1; n <= 6; n++) {
        for (int trial = 0; trial < 20; trial++) {
            AffineForm t = random_isometry(n, 4, false, rng);
            Circuit c = synth_isometry(t.matrix, 0, IsometryFlavor::T4);
            EXPECT_TRUE(implements(c, t.to_gate()));
            EXPECT_LE(c.ops().size(), static_cast<std::size_t>(n * n + n));
            AffineForm f = random_isometry(n, 4, true, rng);
            Circuit d = synth_isometry(f.matrix, f.offset, IsometryFlavor::F4);
            EXPECT_TRUE(implements(d, f.to_gate()));
        }
    }
}

TEST(SynthIsometry, T4RejectsOffset) {
    try {
        synth_isometry(Gf2Matrix::identity(4), 0b1000, IsometryFlavor::T4);
        FAIL();
    } catch (const RevError &e) {
        EXPECT_EQ(e.code(), ErrorCode::FlavorMismatch);
    }
}

TEST(TReduce, TenToSix) {
    Circuit c = t_reduce(10);
    EXPECT_EQ(count_kind(c, PrimitiveKind::Tk), 3);
    EXPECT_TRUE(implements(c, tk_gate(6)));
}

TEST(TReduce, EightToFour) {
    Circuit c = t_reduce(8);
    EXPECT_EQ(count_kind(c, PrimitiveKind::Tk), 3);
    EXPECT_TRUE(implements(c, tk_gate(4)));
}

TEST(TReduce, SixIsSingleGate) {
    Circuit c = t_reduce(6);
    EXPECT_EQ(c.ops().size(), 1u);
    EXPECT_EQ(c.ancilla_count(), 0);
}

TEST(TReduce, LargerWidths) {
    for (int m : {12, 14, 16}) {
        Circuit c = t_reduce(m);
        EXPECT_TRUE(implements(c, tk_gate(m % 4 == 2 ? 6 : 4))) << m;
    }
}

TEST(Synthesize, FredkinOverAll) {
    Circuit c = synthesize(fredkin_gate(), ClassKind::All);
    EXPECT_TRUE(only_uses(c, {PrimitiveKind::Toffoli}));
    EXPECT_TRUE(implements(c, fredkin_gate()));
}

TEST(Synthesize, ToffoliOverFredkinIsRejected) {
    try {
        synthesize(toffoli_gate(), ClassKind::Fredkin);
        FAIL();
    } catch (const RevError &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInClass);
    }
}

TEST(Synthesize, NotOverNotIsSingleGate) {
    Circuit c = synthesize(not_gate(), ClassKind::Not);
    ASSERT_EQ(c.ops().size(), 1u);
    EXPECT_EQ(c.ops()[0].gate.kind(), PrimitiveKind::Not);
}

TEST(Synthesize, EveryClassRandomMembers) {
    std::mt19937_64 rng(kDefaultSeed + 8);
    std::vector<GateClass> classes = finite_catalog();
    classes.push_back(GateClass::mod(3));
    classes.push_back(GateClass::mod(4));
    for (const GateClass &k : classes) {
        bool heavy = !k.is_affine_class();
        int max_n = heavy ? 3 : 6;
        for (int n = 1; n <= max_n; n++) {
            for (int trial = 0; trial < 5; trial++) {
                Gate f = random_member(k, n, rng);
                ASSERT_TRUE(contains(k, f)) << k.name();
                Circuit c = synthesize(f, k);
                EXPECT_LE(c.ancilla_count(), ancilla_ceiling(k)) << k.name();
            }
        }
    }
}

}  // namespace
}  // namespace revlattice
