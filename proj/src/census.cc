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

#include "revlattice/census.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "revlattice/error.h"
#include "revlattice/table1_data.h"

namespace revlattice {

namespace {

BigCount factorial(const BigCount &m) {
    BigCount r = 1;
    for (BigCount i = 2; i <= m; ++i) {
        r *= i;
    }
    return r;
}

BigCount pow2(int e) {
    return BigCount(1) << e;
}

BigCount binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    BigCount r = 1;
    for (int i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// prod_{i=lo}^{hi} (2^{step*i} - 1)
BigCount mersenne_product(int lo, int hi, int step) {
    BigCount r = 1;
    for (int i = lo; i <= hi; i++) {
        r *= pow2(step * i) - 1;
    }
    return r;
}

BigCount t4_size(int n) {
    int m = n / 2;
    return n % 2 == 0 ? pow2(m * m) * mersenne_product(1, m - 1, 2) : pow2(m * m) * mersenne_product(1, m, 2);
}

BigCount t6_size(int n) {
    if (n == 1) {
        return 1;
    }
    int m = n / 4;
    int sign = m % 2 == 0 ? 1 : -1;
    switch (n % 4) {
        case 2:
            return pow2(4 * m * m + 1) * mersenne_product(1, 2 * m, 2);
        case 3:
            return pow2(4 * m * m + 2 * m + 1) * (pow2(2 * m + 1) + sign) * mersenne_product(1, 2 * m, 2);
        case 0:
            return pow2(4 * m * m - 2 * m + 1) * (pow2(2 * m - 1) - sign) * mersenne_product(1, 2 * m - 2, 2);
        default:
            return pow2(4 * m * m - 2 * m + 1) * (pow2(2 * m) - sign) * mersenne_product(1, 2 * m - 1, 2);
    }
}

// Series -sum log2(1 - 2^{-step*i}).
double pochhammer_constant(int step) {
    double s = 0;
    for (int i = 1; i <= 64 / step; i++) {
        s -= std::log2(1.0 - std::ldexp(1.0, -step * i));
    }
    return s;
}

std::string trim(const std::string &s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(trim(cur));
    }
    return out;
}

}  // namespace

BigCount class_size(const GateClass &c, int n) {
    if (n < 1) {
        throw RevError(ErrorCode::BadParameter, "n must be at least 1");
    }
    int tri = n * (n + 1) / 2;
    switch (c.kind()) {
        case ClassKind::All:
            return factorial(pow2(n));
        case ClassKind::FredkinNot: {
            BigCount h = factorial(pow2(n - 1));
            return 2 * h * h;
        }
        case ClassKind::Mod: {
            int k = c.modulus();
            if (k == 2) {
                BigCount h = factorial(pow2(n - 1));
                return h * h;
            }
            BigCount r = 1;
            for (int i = 0; i < k; i++) {
                BigCount a = 0;
                for (int j = i; j <= n; j += k) {
                    a += binomial(n, j);
                }
                r *= factorial(a);
            }
            return r;
        }
        case ClassKind::Fredkin: {
            BigCount r = 1;
            for (int i = 0; i <= n; i++) {
                r *= factorial(binomial(n, i));
            }
            return r;
        }
        case ClassKind::Cnot:
            return pow2(tri) * mersenne_product(1, n, 1);
        case ClassKind::CnotNot:
            return pow2(tri - 1) * mersenne_product(1, n - 1, 1);
        case ClassKind::CnotNotNot:
            return pow2(tri) * mersenne_product(1, n - 1, 1);
        case ClassKind::Trivial:
            return factorial(n);
        case ClassKind::Not:
            return factorial(n) * pow2(n);
        case ClassKind::NotNot:
            return factorial(n) * pow2(n - 1);
        case ClassKind::T4:
        case ClassKind::F4:
            return t4_size(n);
        case ClassKind::T4Not:
            return t4_size(n) * pow2(n);
        case ClassKind::T4NotNot:
            return t4_size(n) * pow2(n - 1);
        case ClassKind::T6:
            return t6_size(n);
        case ClassKind::T6Not:
            return t6_size(n) * pow2(n);
        case ClassKind::T6NotNot:
            return t6_size(n) * pow2(n - 1);
    }
    throw RevError(ErrorCode::BadParameter, "unknown class");
}

std::map<GateClass, BigCount> generator_counts(int n) {
    if (n < 1) {
        throw RevError(ErrorCode::BadParameter, "n must be at least 1");
    }
    std::vector<GateClass> classes = classes_realizable_at(n);
    // Process classes so that every proper subclass comes first.
    std::vector<GateClass> order;
    std::vector<char> done(classes.size(), 0);
    while (order.size() < classes.size()) {
        for (std::size_t i = 0; i < classes.size(); i++) {
            if (done[i]) {
                continue;
            }
            bool ready = true;
            for (std::size_t j = 0; j < classes.size(); j++) {
                if (j != i && !done[j] && leq(classes[j], classes[i])) {
                    ready = false;
                }
            }
            if (ready) {
                done[i] = 1;
                order.push_back(classes[i]);
            }
        }
    }
    std::map<GateClass, BigCount> gen;
    for (const GateClass &c : order) {
        BigCount g = class_size(c, n);
        for (const auto &[d, count] : gen) {
            if (leq(d, c)) {
                g -= count;
            }
        }
        gen[c] = g;
    }
    return gen;
}

BigCount generator_count(const GateClass &c, int n) {
    std::map<GateClass, BigCount> all = generator_counts(n);
    auto it = all.find(c);
    return it == all.end() ? BigCount(0) : it->second;
}

std::map<GateClass, BigCount> brute_census(int n, int jobs) {
    if (n < 1 || n > 3) {
        throw RevError(ErrorCode::TooLarge, "brute census enumerates (2^n)! gates and supports n <= 3");
    }
    int m = 1 << n;
    jobs = std::max(1, std::min(jobs, m));
    // Chunk c holds the permutations whose image of 0 is c.
    std::vector<std::map<GateClass, std::uint64_t>> per_chunk(m);
    auto work = [&](int worker) {
        for (int chunk = worker; chunk < m; chunk += jobs) {
            std::vector<std::uint32_t> rest;
            for (int v = 0; v < m; v++) {
                if (v != chunk) {
                    rest.push_back(static_cast<std::uint32_t>(v));
                }
            }
            std::vector<std::uint32_t> table(m);
            table[0] = static_cast<std::uint32_t>(chunk);
            do {
                std::copy(rest.begin(), rest.end(), table.begin() + 1);
                per_chunk[chunk][classify_gate(Gate::from_table(n, table))]++;
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
    };
    std::vector<std::thread> threads;
    for (int w = 1; w < jobs; w++) {
        threads.emplace_back(work, w);
    }
    work(0);
    for (auto &t : threads) {
        t.join();
    }
    std::map<GateClass, BigCount> total;
    for (const GateClass &c : classes_realizable_at(n)) {
        total[c] = 0;
    }
    for (const auto &chunk : per_chunk) {
        for (const auto &[c, count] : chunk) {
            total[c] += count;
        }
    }
    return total;
}

Word characteristic_vector(const Gf2Matrix &a) {
    if (!a.is_orthogonal()) {
        throw RevError(ErrorCode::NotOrthogonal, "characteristic vector needs an orthogonal matrix");
    }
    int n = a.size();
    Word c = 0;
    for (int j = 0; j < n; j++) {
        if (weight(a.column(j)) % 4 == 3) {
            c |= basis_word(n, j);
        }
    }
    return c;
}

BigCount coset_count(int n) {
    BigCount r = 0;
    for (int j = 0; j <= n; j += 4) {
        r += binomial(n, j);
    }
    return r;
}

double log2_big(const BigCount &v) {
    if (v <= 0) {
        throw RevError(ErrorCode::BadParameter, "log2 of a non-positive count");
    }
    std::size_t b = boost::multiprecision::msb(v);
    if (b < 53) {
        return std::log2(v.convert_to<double>());
    }
    BigCount top = v >> (b - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(b - 52);
}

double asymptotic_log2(const GateClass &c, int n) {
    if (n < 1) {
        throw RevError(ErrorCode::BadParameter, "n must be at least 1");
    }
    static const double alpha = pochhammer_constant(1);
    static const double beta = pochhammer_constant(2);
    const double ln2 = std::log(2.0);
    const double pi = std::acos(-1.0);
    double dn = n;
    double big = std::ldexp(1.0, n);
    auto trivial = [&] { return dn * std::log2(dn) - dn / ln2 + 0.5 * std::log2(2 * pi * dn); };
    auto t4 = [&] { return dn * (dn - 1) / 2 - beta; };
    auto t6 = [&] { return (dn * dn - 3 * dn + 4) / 2 - beta; };
    auto parity = [&] { return dn * big - big / ln2 - big + dn + std::log2(pi); };
    switch (c.kind()) {
        case ClassKind::All:
            return dn * big - big / ln2 + dn / 2 + 0.5 * std::log2(2 * pi);
        case ClassKind::FredkinNot:
            return parity() + 1;
        case ClassKind::Mod:
            if (c.modulus() == 2) {
                return parity();
            }
            return dn * big - big / ln2 - big * std::log2(static_cast<double>(c.modulus()));
        case ClassKind::Fredkin:
            return dn * big - big / ln2 - big * std::log2(pi * std::exp(1.0) * std::sqrt(dn) / 2);
        case ClassKind::Cnot:
            return dn * (dn + 1) - alpha;
        case ClassKind::CnotNotNot:
            return dn * dn - alpha;
        case ClassKind::CnotNot:
            return dn * dn - alpha - 1;
        case ClassKind::Trivial:
            return trivial();
        case ClassKind::Not:
            return trivial() + dn;
        case ClassKind::NotNot:
            return trivial() + dn - 1;
        case ClassKind::T4:
        case ClassKind::F4:
            return t4();
        case ClassKind::T4Not:
            return t4() + dn;
        case ClassKind::T4NotNot:
            return t4() + dn - 1;
        case ClassKind::T6:
            return t6();
        case ClassKind::T6Not:
            return t6() + dn;
        case ClassKind::T6NotNot:
            return t6() + dn - 1;
    }
    throw RevError(ErrorCode::BadParameter, "unknown class");
}

double asymptotic_check(const GateClass &c, int n) {
    double exact = log2_big(class_size(c, n));
    if (exact <= 0) {
        throw RevError(ErrorCode::BadParameter, c.name() + " has a single member at this n");
    }
    return std::abs(exact - asymptotic_log2(c, n)) / exact;
}

std::string scientific5(const BigCount &v) {
    if (v == 0) {
        return "0";
    }
    std::string digits = v.str();
    int exponent = static_cast<int>(digits.size()) - 1;
    if (digits.size() <= 5) {
        digits.append(5 - digits.size(), '0');
    } else {
        BigCount scale = 1;
        for (std::size_t i = 0; i < digits.size() - 5; i++) {
            scale *= 10;
        }
        BigCount mant = v / scale;
        BigCount rem = v % scale;
        if (2 * rem >= scale) {
            mant += 1;
        }
        digits = mant.str();
        if (digits.size() > 5) {
            digits = digits.substr(0, 5);
            exponent++;
        }
    }
    return digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(exponent);
}

std::string format_count(const BigCount &v) {
    std::string s = v.str();
    return s.size() <= 64 ? s : scientific5(v);
}

std::vector<Table1Row> table1(const std::string &text) {
    std::istringstream in(text.empty() ? std::string(kTable1Text) : text);
    std::vector<Table1Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        std::vector<std::string> cells = split(line, '|');
        if (cells.size() != 2 + (kTable1LastN - kTable1FirstN + 1)) {
            throw RevError(ErrorCode::ParseError, "table row has the wrong number of cells: " + line);
        }
        Table1Row row;
        row.label = cells[0];
        std::istringstream names(cells[1]);
        std::string name;
        while (names >> name) {
            row.classes.push_back(parse_class_name(name));
        }
        row.values.assign(cells.begin() + 2, cells.end());
        rows.push_back(row);
    }
    return rows;
}

std::vector<Table1Mismatch> compare_with_table1(int n) {
    if (n < kTable1FirstN || n > kTable1LastN) {
        throw RevError(ErrorCode::BadParameter, "the table covers n = 3..7");
    }
    std::map<GateClass, BigCount> gen = generator_counts(n);
    std::vector<Table1Mismatch> out;
    for (const Table1Row &row : table1()) {
        const std::string &expected = row.values[n - kTable1FirstN];
        for (const GateClass &c : row.classes) {
            auto it = gen.find(c);
            BigCount v = it == gen.end() ? BigCount(0) : it->second;
            bool sci = expected.find('e') != std::string::npos;
            std::string computed = sci ? scientific5(v) : v.str();
            if (computed != expected) {
                out.push_back({row.label, c, n, expected, computed});
            }
        }
    }
    return out;
}

}  // namespace revlattice
