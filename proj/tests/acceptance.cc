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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "revlattice/census.h"
#include "revlattice/circuit.h"
#include "revlattice/error.h"
#include "revlattice/lattice.h"
#include "revlattice/props.h"
#include "revlattice/sampling.h"
#include "revlattice/synth.h"

namespace revlattice {
namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void fail(const std::string &why) {
        if (passed) {
            detail << why;
        }
        passed = false;
    }
};

// Brute census at n = 3 against the n = 3 column of the embedded table.
void criterion1(Outcome &o) {
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::map<GateClass, BigCount> brute = brute_census(3, static_cast<int>(jobs));
    std::map<GateClass, BigCount> expected;
    for (const Table1Row &row : table1()) {
        for (const GateClass &c : row.classes) {
            expected[c] = BigCount(row.values[0]);
        }
    }
    BigCount total = 0;
    for (const auto &[c, count] : brute) {
        total += count;
        BigCount want = expected.count(c) ? expected[c] : BigCount(0);
        if (count != want) {
            o.fail(c.name() + " counted " + count.str() + ", table " + want.str());
        }
    }
    for (const auto &[c, want] : expected) {
        if (want != 0 && !brute.count(c)) {
            o.fail(c.name() + " missing from the census");
        }
    }
    if (total != 40320) {
        o.fail("total " + total.str());
    }
    o.detail << (o.passed ? "40320 gates, every class matches" : "");
}

void criterion2(Outcome &o) {
    std::size_t entries = 0;
    for (int n = 4; n <= 7; n++) {
        for (const Table1Mismatch &m : compare_with_table1(n)) {
            o.fail(m.label + " n=" + std::to_string(m.n) + ": table " + m.expected + ", computed " + m.computed);
        }
        for (const Table1Row &row : table1()) {
            entries += row.classes.size();
        }
    }
    if (generator_count(ClassKind::Fredkin, 4) != 414696 || generator_count(GateClass::mod(4), 4) != 414696) {
        o.fail("Fredkin or C4 generator count at n=4 is not 414696");
    }
    if (scientific5(generator_count(ClassKind::All, 7)) != "3.8562e215") {
        o.fail("Toffoli generator count at n=7 is " + scientific5(generator_count(ClassKind::All, 7)));
    }
    o.detail << (o.passed ? std::to_string(entries) + " entries for n=4..7 match" : "");
}

void criterion3(Outcome &o) {
    const int n = 4;
    std::vector<GateClass> affine;
    for (const GateClass &c : finite_catalog()) {
        if (c.is_affine_class()) {
            affine.push_back(c);
        }
    }
    std::map<GateClass, BigCount> counted;
    std::uint64_t total = 0;
    for_each_invertible_matrix(n, [&](const Gf2Matrix &a) {
        for (Word b = 0; b < 16; b++) {
            total++;
            InvariantSignature s = signature(AffineForm{a, b}.to_gate());
            for (const GateClass &c : affine) {
                if (contains(c, s)) {
                    counted[c]++;
                }
            }
        }
    });
    if (total != 322560) {
        o.fail("enumerated " + std::to_string(total) + " affine gates");
    }
    for (const GateClass &c : affine) {
        if (counted[c] != class_size(c, n)) {
            o.fail(c.name() + " filtered " + counted[c].str() + ", class_size " + class_size(c, n).str());
        }
    }
    int weight0mod4 = 0;
    for (Word x = 0; x < 16; x++) {
        weight0mod4 += weight(x) % 4 == 0;
    }
    if (counted[ClassKind::T4] != counted[ClassKind::T6] * weight0mod4) {
        o.fail("T4/T6 ratio differs from " + std::to_string(weight0mod4));
    }
    if (o.passed) {
        o.detail << "322560 gates; CNOT " << counted[ClassKind::Cnot] << ", CNOTNOT " << counted[ClassKind::CnotNot]
                 << ", T4 " << counted[ClassKind::T4] << ", F4 " << counted[ClassKind::F4] << ", T6 "
                 << counted[ClassKind::T6] << ", TRIVIAL " << counted[ClassKind::Trivial] << ", T4/T6 = "
                 << weight0mod4;
    }
}

void criterion4(Outcome &o) {
    std::mt19937_64 rng(kDefaultSeed);
    std::vector<GateClass> classes = finite_catalog();
    for (int k = 2; k <= 4; k++) {
        classes.push_back(GateClass::mod(k));
    }
    int targets = 0;
    std::size_t worst_affine = 0;
    for (const GateClass &c : classes) {
        bool affine = c.is_affine_class();
        for (int i = 0; i < 100; i++) {
            int n = affine ? 3 + i % 4 : 3 + i % 2;
            Gate target = random_member(c, n, rng);
            Circuit circ;
            try {
                circ = synthesize(target, c);
            } catch (const RevError &e) {
                o.fail(c.name() + " n=" + std::to_string(n) + ": " + e.what());
                break;
            }
            VerificationReport r = verify(circ, target);
            targets++;
            if (!r.implements_target) {
                o.fail(c.name() + " n=" + std::to_string(n) + ": circuit does not implement the target");
            }
            if (r.ancilla_count > ancilla_ceiling(c)) {
                o.fail(c.name() + " uses " + std::to_string(r.ancilla_count) + " ancillas");
            }
            if (affine) {
                std::size_t bound = static_cast<std::size_t>(n * n + n);
                if (r.gate_count > bound) {
                    o.fail(c.name() + " n=" + std::to_string(n) + ": " + std::to_string(r.gate_count) +
                           " gates exceeds n^2+n");
                }
                worst_affine = std::max(worst_affine, r.gate_count);
            }
        }
    }
    o.detail << (o.passed ? std::to_string(targets) + " targets over " + std::to_string(classes.size()) +
                                " classes verified; largest affine circuit " + std::to_string(worst_affine) +
                                " gates"
                          : "");
}

void criterion5(Outcome &o) {
    std::vector<PropertyResult> all = run_property_suite(4);
    std::uint64_t checked = 0;
    for (const PropertyResult &r : all) {
        checked += r.checked;
        if (!r.passed()) {
            o.fail(r.name + ": " + std::to_string(r.counterexamples) + " counterexamples, first " +
                   r.first_counterexample);
        }
    }
    o.detail << (o.passed ? std::to_string(all.size()) + " properties, " + std::to_string(checked) +
                                " cases, no counterexamples"
                          : "");
}

// Decodes each block of `len` data wires; -1 when a block is not a codeword.
std::vector<int> decode(Word y, int width, int blocks, const std::string &a0, const std::string &a1) {
    int len = static_cast<int>(a0.size());
    std::vector<int> bits;
    for (int b = 0; b < blocks; b++) {
        std::string s;
        for (int i = 0; i < len; i++) {
            s += get_wire(y, width, b * len + i) ? '1' : '0';
        }
        bits.push_back(s == a0 ? 0 : s == a1 ? 1 : -1);
    }
    return bits;
}

void criterion6(Outcome &o) {
    std::vector<GateClass> classes;
    for (const GateClass &c : finite_catalog()) {
        if (c != ClassKind::Trivial && c != ClassKind::Not && c != ClassKind::NotNot) {
            classes.push_back(c);
        }
    }
    classes.push_back(GateClass::mod(3));
    Circuit logical(3);
    logical.cx(0, 1);
    logical.cx(1, 2);
    logical.cx(2, 0);
    logical.swap(0, 2);
    int gadgets = 0;
    for (const GateClass &c : classes) {
        Gadget g = encoded_cnot_gadget(c);
        gadgets++;
        if (!g.verify()) {
            o.fail("encoded CNOT over " + c.name());
        }
        if (!c.is_affine_class()) {
            gadgets++;
            if (!encoded_fredkin_gadget(c).verify()) {
                o.fail("encoded Fredkin over " + c.name());
            }
        }
        Gadget chained = encode_cnot_circuit(logical, c);
        if (!chained.verify()) {
            o.fail("chained CNOT circuit over " + c.name());
        }
        // Independent check: encode, simulate, decode.
        const Circuit &cc = chained.circuit;
        int len = static_cast<int>(g.alpha0.size());
        for (Word x = 0; x < 8; x++) {
            Word data = 0;
            for (int i = 0; i < 3; i++) {
                const std::string &code = get_wire(x, 3, i) ? g.alpha1 : g.alpha0;
                for (int j = 0; j < len; j++) {
                    data = (data << 1) | static_cast<Word>(code[j] - '0');
                }
            }
            Word in = cc.initial_word(data);
            Word out = simulate(cc, in);
            Word want = simulate(logical, x);
            std::vector<int> bits = decode(out, cc.width(), 3, g.alpha0, g.alpha1);
            for (int i = 0; i < 3; i++) {
                if (bits[i] != get_wire(want, 3, i)) {
                    o.fail("chained circuit over " + c.name() + " decodes wrongly on " + to_bit_string(x, 3));
                }
            }
            Word amask = low_mask(cc.ancilla_count());
            if ((out & amask) != (in & amask)) {
                o.fail("chained circuit over " + c.name() + " leaves ancillas dirty");
            }
        }
    }
    o.detail << (o.passed ? std::to_string(gadgets) + " gadgets and " + std::to_string(classes.size()) +
                                " chained 3-bit CNOT circuits verified"
                          : "");
}

void criterion7(Outcome &o) {
    std::map<GateClass, GateClass> collapses{
        {ClassKind::NotNot, ClassKind::Not},
        {GateClass::mod(2), ClassKind::FredkinNot},
        {ClassKind::T4NotNot, ClassKind::T4Not},
        {ClassKind::T6NotNot, ClassKind::T6Not},
    };
    int changed = 0;
    for (const GateClass &c : classes_realizable_at(6)) {
        GateClass strict = classify_set(canonical_generator(c));
        GateClass loose = loose_collapse(strict);
        auto it = collapses.find(c);
        GateClass want = it == collapses.end() ? c : it->second;
        changed += loose != strict;
        if (strict != c || loose != want) {
            o.fail(c.name() + " maps to " + loose.name() + " under the loose rule");
        }
    }
    if (changed != 4) {
        o.fail(std::to_string(changed) + " classes change under the loose rule");
    }
    // NOTNOT on the data bit and a dummy ancilla.
    Circuit c(1);
    int a = c.add_ancilla(0);
    c.xx(0, a);
    bool strict_raised = false;
    try {
        realized_transformation(c, AncillaRule::Strict);
    } catch (const RevError &e) {
        strict_raised = e.code() == ErrorCode::AncillaNotRestored;
    }
    if (!strict_raised) {
        o.fail("strict rule did not raise AncillaNotRestored");
    }
    Gate loose = realized_transformation(c, AncillaRule::Loose);
    if (loose != Gate::from_table(1, {1, 0})) {
        o.fail("loose rule did not realize NOT");
    }
    o.detail << (o.passed ? "4 collapses, all other classes fixed; strict rule rejects the dummy-ancilla NOT, "
                            "loose rule accepts it"
                          : "");
}

void criterion8(Outcome &o) {
    std::ostringstream all;
    std::string over;
    for (GateClass c : {GateClass(ClassKind::All), GateClass(ClassKind::Cnot), GateClass(ClassKind::Trivial),
                        GateClass(ClassKind::T4), GateClass(ClassKind::T6)}) {
        double err = asymptotic_check(c, 7);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s %.3f%%", c.name().c_str(), 100 * err);
        all << (all.tellp() > 0 ? ", " : "") << buf;
        if (err >= 0.01) {
            over += (over.empty() ? "" : " ") + c.name();
            o.passed = false;
        }
    }
    o.detail << "relative errors at n=7: " << all.str();
    if (!over.empty()) {
        o.detail << "; at or above 1%: " << over;
    }
}

}  // namespace
}  // namespace revlattice

int main() {
    using namespace revlattice;
    struct Criterion {
        int id;
        const char *title;
        std::function<void(Outcome &)> run;
    };
    std::vector<Criterion> criteria{
        {1, "brute census n=3", criterion1},
        {2, "generator counts vs table n=4..7", criterion2},
        {3, "affine membership n=4", criterion3},
        {4, "synthesis soundness", criterion4},
        {5, "property suite", criterion5},
        {6, "encoded universality", criterion6},
        {7, "loose ancilla rule", criterion7},
        {8, "asymptotics n=7", criterion8},
    };
    int failed = 0;
    for (const Criterion &c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.passed;
        std::printf("%s criterion %d (%s): %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", c.id, c.title,
                    o.detail.str().c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
