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

#ifndef REVLATTICE_CENSUS_H
#define REVLATTICE_CENSUS_H

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "revlattice/gf2.h"
#include "revlattice/lattice.h"

namespace revlattice {

using BigCount = boost::multiprecision::cpp_int;

/// Number of n-bit gates in c.
BigCount class_size(const GateClass &c, int n);

/// Number of n-bit gates G with classify_gate(G) == c, by Moebius inversion
/// over classes_realizable_at(n).
BigCount generator_count(const GateClass &c, int n);
std::map<GateClass, BigCount> generator_counts(int n);

/// Classifies every permutation of {0,1}^n (n <= 3) on `jobs` threads.
std::map<GateClass, BigCount> brute_census(int n, int jobs = 1);

/// c_i = 1 iff column i of the orthogonal matrix a has weight 3 mod 4.
Word characteristic_vector(const Gf2Matrix &a);
/// Number of n-bit words of weight 0 mod 4.
BigCount coset_count(int n);

/// The leading-order expansion of log2 class_size(c, n).
double asymptotic_log2(const GateClass &c, int n);
/// |log2(exact) - expansion| / log2(exact).
double asymptotic_check(const GateClass &c, int n);
double log2_big(const BigCount &v);

/// Exact digits up to 64 digits, else "M.MMMMeE" with five significant
/// figures.
std::string format_count(const BigCount &v);
/// Five-significant-figure scientific form, e.g. "3.8562e215".
std::string scientific5(const BigCount &v);

struct Table1Row {
    std::string label;
    std::vector<GateClass> classes;
    /// Entries for n = 3..7 as written in the table.
    std::vector<std::string> values;
};

inline constexpr int kTable1FirstN = 3;
inline constexpr int kTable1LastN = 7;

/// Parses the embedded table (or `text` when given).
std::vector<Table1Row> table1(const std::string &text = "");

struct Table1Mismatch {
    std::string label;
    GateClass cls;
    int n;
    std::string expected;
    std::string computed;
};

/// Compares generator_count against every entry of the table for n.
std::vector<Table1Mismatch> compare_with_table1(int n);

}  // namespace revlattice

#endif
