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

#include <cmath>

#include "revlattice/census.h"
#include "revlattice/error.h"
#include "revlattice/named_gates.h"

namespace revlattice {
namespace {

// Independent oracle: n! by repeated multiplication in 64 bits.
std::uint64_t small_factorial(int m) {
    std::uint64_t r = 1;
    for (int i = 2; i <= m; i++) {
        r *= static_cast<std::uint64_t>(i);
    }
    return r;
}

TEST(ClassSize, AllIsFactorial) {
    EXPECT_EQ(class_size(ClassKind::All, 3), BigCount(40320));
    EXPECT_EQ(class_size(ClassKind::All, 4), BigCount(small_factorial(16)));
}

TEST(ClassSize, FredkinIsProductOfBinomialFactorials) {
    EXPECT_EQ(class_size(ClassKind::Fredkin, 3), BigCount(36));
    EXPECT_EQ(class_size(ClassKind::Fredkin, 4), BigCount(1 * 24 * 720 * 24 * 1));
}

TEST(ClassSize, CnotByEnumeration) {
    EXPECT_EQ(class_size(ClassKind::Cnot, 4), BigCount(322560));
    std::uint64_t invertible = 0;
    for_each_invertible_matrix(4, [&](const Gf2Matrix &) { invertible++; });
    EXPECT_EQ(invertible * 16, 322560u);
}

TEST(ClassSize, SmallWidthsMatchBruteForce) {
    for (int n = 1; n <= 3; n++) {
        std::map<GateClass, BigCount> census = brute_census(n);
        for (const auto &[c, count] : census) {
            // class_size counts every gate whose class is at or below c.
            BigCount below = 0;
            for (const auto &[d, k] : census) {
                if (leq(d, c)) {
                    below += k;
                }
            }
            EXPECT_EQ(class_size(c, n), below) << c.name() << " n=" << n;
        }
    }
}

TEST(ClassSize, T4OverT6IsCosetCount) {
    for (int n = 2; n <= 12; n++) {
        BigCount t4 = class_size(ClassKind::T4, n);
        BigCount t6 = class_size(ClassKind::T6, n);
        EXPECT_EQ(t4 % t6, 0) << n;
        EXPECT_EQ(t4 / t6, coset_count(n)) << n;
    }
    EXPECT_EQ(coset_count(4), BigCount(2));
}

TEST(ClassSize, F4EqualsT4) {
    for (int n = 1; n <= 9; n++) {
        EXPECT_EQ(class_size(ClassKind::F4, n), class_size(ClassKind::T4, n));
    }
}

TEST(ClassSize, RejectsZeroWidth) {
    EXPECT_THROW(class_size(ClassKind::All, 0), RevError);
}

TEST(GeneratorCount, TableExamples) {
    EXPECT_EQ(generator_count(ClassKind::All, 3), BigCount(37980));
    EXPECT_EQ(generator_count(ClassKind::Fredkin, 4), BigCount(414696));
    EXPECT_EQ(generator_count(GateClass::mod(4), 4), BigCount(414696));
    EXPECT_EQ(generator_count(ClassKind::Cnot, 3), BigCount(1152));
}

TEST(GeneratorCount, ColumnsSumToAllGates) {
    for (int n = 1; n <= 7; n++) {
        BigCount sum = 0;
        for (const auto &[c, k] : generator_counts(n)) {
            EXPECT_GE(k, 0) << c.name();
            sum += k;
        }
        EXPECT_EQ(sum, class_size(ClassKind::All, n)) << n;
    }
}

TEST(BruteCensus, ThreeBitColumn) {
    std::map<GateClass, BigCount> census = brute_census(3, 4);
    std::map<GateClass, BigCount> expected = {
        {ClassKind::All, 37980},    {ClassKind::FredkinNot, 480}, {GateClass::mod(2), 450},
        {GateClass::mod(3), 36},    {ClassKind::Fredkin, 30},     {ClassKind::Cnot, 1152},
        {ClassKind::CnotNotNot, 72}, {ClassKind::CnotNot, 72},    {ClassKind::Not, 24},
        {ClassKind::NotNot, 18},    {ClassKind::Trivial, 6},
    };
    BigCount total = 0;
    for (const auto &[c, k] : census) {
        auto it = expected.find(c);
        EXPECT_EQ(k, it == expected.end() ? BigCount(0) : it->second) << c.name();
        total += k;
    }
    EXPECT_EQ(total, BigCount(40320));
    EXPECT_EQ(census, generator_counts(3));
}

TEST(BruteCensus, OneAndTwoBits) {
    std::map<GateClass, BigCount> one = brute_census(1);
    EXPECT_EQ(one[ClassKind::Not], 1);
    EXPECT_EQ(one[ClassKind::Trivial], 1);
    BigCount total = 0;
    for (const auto &[c, k] : brute_census(2)) {
        total += k;
    }
    EXPECT_EQ(total, 24);
}

TEST(BruteCensus, RejectsLargeWidths) {
    try {
        brute_census(4);
        FAIL();
    } catch (const RevError &e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
}

TEST(Table1, EveryEntryMatches) {
    for (int n = kTable1FirstN; n <= kTable1LastN; n++) {
        for (const Table1Mismatch &m : compare_with_table1(n)) {
            ADD_FAILURE() << m.label << " n=" << n << " expected " << m.expected << " computed " << m.computed;
        }
    }
}

TEST(Table1, HasAllRows) {
    std::vector<Table1Row> rows = table1();
    EXPECT_EQ(rows.size(), 21u);
    EXPECT_EQ(rows.front().values.back(), "3.8562e215");
}

TEST(Formatting, ScientificRounding) {
    EXPECT_EQ(scientific5(BigCount(123456)), "1.2346e5");
    EXPECT_EQ(scientific5(BigCount(999995)), "1.0000e6");
    EXPECT_EQ(scientific5(BigCount(42)), "4.2000e1");
    EXPECT_EQ(format_count(BigCount(42)), "42");
    EXPECT_EQ(format_count(class_size(ClassKind::All, 7)), scientific5(class_size(ClassKind::All, 7)));
}

TEST(CharacteristicVector, Examples) {
    EXPECT_EQ(characteristic_vector(Gf2Matrix::identity(5)), 0u);
    auto t4 = affine_form(tk_gate(4));
    EXPECT_EQ(characteristic_vector(t4->matrix), 0b1111u);
    auto cnot = affine_form(cnot_gate());
    EXPECT_THROW(characteristic_vector(cnot->matrix), RevError);
}

TEST(CharacteristicVector, WeightDivisibleByFourOverAllOrthogonal4x4) {
    int orthogonal = 0;
    for_each_invertible_matrix(4, [&](const Gf2Matrix &a) {
        if (a.is_orthogonal()) {
            orthogonal++;
            EXPECT_EQ(weight(characteristic_vector(a)) % 4, 0);
        }
    });
    EXPECT_EQ(orthogonal, 48);
}

TEST(Asymptotics, Log2OfHugeCounts) {
    EXPECT_NEAR(log2_big(BigCount(1024)), 10.0, 1e-12);
    EXPECT_NEAR(log2_big(BigCount(1) << 500), 500.0, 1e-9);
}

TEST(Asymptotics, CnotExpansionAtSeven) {
    EXPECT_NEAR(asymptotic_log2(ClassKind::Cnot, 7), 54.2081, 1e-3);
    EXPECT_LT(asymptotic_check(ClassKind::Cnot, 7), 0.01);
    EXPECT_LT(asymptotic_check(ClassKind::All, 7), 0.01);
    EXPECT_LT(asymptotic_check(ClassKind::T4, 7), 0.01);
}

TEST(Asymptotics, ErrorShrinksWithWidth) {
    for (GateClass c : {GateClass(ClassKind::All), GateClass(ClassKind::Cnot), GateClass(ClassKind::T4),
                        GateClass(ClassKind::T6), GateClass(ClassKind::Trivial), GateClass(ClassKind::CnotNotNot)}) {
        EXPECT_LT(asymptotic_check(c, 12), asymptotic_check(c, 7)) << c.name();
    }
}

}  // namespace
}  // namespace revlattice
