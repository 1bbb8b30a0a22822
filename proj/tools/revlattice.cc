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

// Command-line front end. Exit codes: 0 success, 1 negative answer,
// 2 usage error, 3 malformed input, 4 synthesis target outside the class.

#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "revlattice/census.h"
#include "revlattice/circuit.h"
#include "revlattice/error.h"
#include "revlattice/formats.h"
#include "revlattice/lattice.h"
#include "revlattice/props.h"
#include "revlattice/sampling.h"
#include "revlattice/synth.h"

namespace {

using namespace revlattice;

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kMalformed = 3, kOutsideClass = 4 };

struct Globals {
    bool loose = false;
    bool verbose = false;
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotInClass:
            return kOutsideClass;
        case ErrorCode::ParseError:
        case ErrorCode::DuplicateRow:
        case ErrorCode::MissingRow:
        case ErrorCode::NotBijective:
        case ErrorCode::ArityMismatch:
        case ErrorCode::ArityTooLarge:
        case ErrorCode::WidthMismatch:
            return kMalformed;
        case ErrorCode::VerificationFailed:
        case ErrorCode::AncillaNotRestored:
        case ErrorCode::AncillaInputDependent:
            return kNegative;
        default:
            return kUsage;
    }
}

// Re-throws with the file name prepended.
template <typename T, typename F>
T load(const std::string &path, F parse) {
    try {
        return parse(read_text_file(path));
    } catch (const RevError &e) {
        std::string msg = e.what();
        throw RevError(e.code(), path + ": " + msg.substr(msg.find(": ") + 2));
    }
}

Gate load_gate(const std::string &path) {
    return load<Gate>(path, [](const std::string &s) { return parse_rgt(s); });
}

Circuit load_circuit(const std::string &path) {
    return load<Circuit>(path, [](const std::string &s) { return parse_rgc(s); });
}

// An unknown class name is a usage error, not malformed input.
GateClass class_argument(const std::string &name) {
    try {
        return parse_class_name(name);
    } catch (const RevError &) {
        throw RevError(ErrorCode::BadParameter, "unknown class '" + name + "'");
    }
}

AncillaRule rule_of(const Globals &g) {
    return g.loose ? AncillaRule::Loose : AncillaRule::Strict;
}

int cmd_classify(const Globals &g, const std::vector<std::string> &files) {
    std::vector<Gate> gates;
    for (const std::string &f : files) {
        gates.push_back(load_gate(f));
        if (g.verbose) {
            GateClass c = classify_gate(gates.back());
            std::cout << f << ": " << (g.loose ? loose_collapse(c) : c).name() << "\n";
        }
    }
    GateClass c = classify_set(gates);
    if (g.loose) {
        c = loose_collapse(c);
    }
    std::cout << c.name() << "\n";
    if (g.verbose) {
        std::cout << c.description() << "\n";
    }
    return kOk;
}

int cmd_member(const Globals &g, const std::string &target_file, const std::vector<std::string> &gen_files) {
    Gate target = load_gate(target_file);
    std::vector<Gate> gens;
    for (const std::string &f : gen_files) {
        gens.push_back(load_gate(f));
    }
    GateClass c = classify_set(gens);
    if (g.loose) {
        c = loose_collapse(c);
    }
    std::string why = separating_invariant(c, signature(target));
    if (g.verbose) {
        std::cout << "generators span " << c.name() << "\n";
    }
    if (why.empty()) {
        std::cout << "YES\n";
        return kOk;
    }
    std::cout << "NO: " << why << "\n";
    return kNegative;
}

int cmd_synth(const Globals &g, const std::string &target_file, const std::string &class_name,
              const std::string &output) {
    Gate target = load_gate(target_file);
    GateClass over = class_argument(class_name);
    Circuit c = synthesize(target, over);
    CircuitStats s = stats(c);
    std::string text = write_rgc(c, target_file + " over " + over.name());
    if (output.empty()) {
        std::cout << text;
    } else {
        write_text_file(output, text);
    }
    std::ostream &report = output.empty() ? std::cerr : std::cout;
    report << "gates " << s.gate_count << ", ancillas " << s.ancilla_count;
    if (g.verbose) {
        report << ", depth " << s.depth;
    }
    report << "\n";
    return kOk;
}

int cmd_verify(const Globals &g, const std::string &circuit_file, const std::string &target_file) {
    Circuit c = load_circuit(circuit_file);
    Gate target = load_gate(target_file);
    VerificationReport r = verify(c, target, rule_of(g));
    std::string text = r.str(c.data_wires());
    if (!g.verbose && !r.implements_target) {
        // The summary line and the first few findings.
        std::size_t cut = 0;
        for (int lines = 0; lines < 6 && cut != std::string::npos; lines++) {
            cut = text.find('\n', cut + 1);
        }
        if (cut != std::string::npos && cut + 1 < text.size()) {
            text = text.substr(0, cut + 1) + "  ... (--verbose lists all)\n";
        }
    }
    std::cout << text;
    return r.implements_target ? kOk : kNegative;
}

int cmd_simulate(const Globals &g, const std::string &circuit_file, const std::string &bits) {
    Circuit c = load_circuit(circuit_file);
    if (bits.empty() || bits.find_first_not_of("01") != std::string::npos) {
        throw RevError(ErrorCode::ParseError, "input must be a bit string, got '" + bits + "'");
    }
    int len = static_cast<int>(bits.size());
    Word x = parse_bit_string(bits);
    if (len == c.data_wires()) {
        x = c.initial_word(x);
    } else if (len != c.width()) {
        throw RevError(ErrorCode::WidthMismatch, "input has " + std::to_string(len) + " bits; expected " +
                                                     std::to_string(c.data_wires()) + " or " +
                                                     std::to_string(c.width()));
    }
    Word y = simulate(c, x);
    std::cout << to_bit_string(y, c.width()) << "\n";
    if (g.verbose) {
        int a = c.ancilla_count();
        std::cout << "data " << to_bit_string(y >> a, c.data_wires());
        if (a > 0) {
            std::cout << ", ancillas " << to_bit_string(y & low_mask(a), a);
        }
        std::cout << "\n";
    }
    return kOk;
}

int cmd_census(const Globals &g, int n, const std::string &mode) {
    if (mode == "formula") {
        if (n < 1 || n > 12) {
            throw RevError(ErrorCode::TooLarge, "formula census supports 1 <= n <= 12");
        }
        std::map<GateClass, BigCount> gen = generator_counts(n);
        std::cout << "class\tsize\tgenerators\n";
        for (const GateClass &c : classes_realizable_at(n)) {
            std::cout << c.name() << "\t" << format_count(class_size(c, n)) << "\t" << format_count(gen[c]) << "\n";
        }
        return kOk;
    }
    if (mode == "brute") {
        std::map<GateClass, BigCount> counts = brute_census(n, g.jobs);
        for (const GateClass &c : classes_realizable_at(n)) {
            std::cout << c.name() << "\t" << counts[c] << "\n";
        }
        return kOk;
    }
    // compare
    if (n < 1 || n > kTable1LastN) {
        throw RevError(ErrorCode::TooLarge, "compare mode supports 1 <= n <= 7");
    }
    bool ok = true;
    if (n <= 3) {
        std::map<GateClass, BigCount> counts = brute_census(n, g.jobs);
        std::map<GateClass, BigCount> gen = generator_counts(n);
        int diffs = 0;
        for (const GateClass &c : classes_realizable_at(n)) {
            if (counts[c] != gen[c]) {
                std::cout << "brute/formula mismatch for " << c.name() << ": " << counts[c] << " vs " << gen[c]
                          << "\n";
                diffs++;
            }
        }
        if (diffs == 0) {
            std::cout << "brute census matches the formulas for all " << classes_realizable_at(n).size()
                      << " classes\n";
        }
        ok = diffs == 0;
    }
    if (n >= kTable1FirstN) {
        std::vector<Table1Mismatch> mm = compare_with_table1(n);
        for (const Table1Mismatch &m : mm) {
            std::cout << "table mismatch in row " << m.label << " (" << m.cls.name() << "): table " << m.expected
                      << ", computed " << m.computed << "\n";
        }
        if (mm.empty()) {
            std::cout << "all " << table1().size() << " rows match the reference table\n";
        }
        ok = ok && mm.empty();
    }
    return ok ? kOk : kNegative;
}

int cmd_props(const Globals &g, int n) {
    bool ok = true;
    for (const PropertyResult &r : run_property_suite(n)) {
        ok = ok && r.passed();
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " cases, "
                  << r.counterexamples << " counterexamples";
        if (!r.passed() && !r.first_counterexample.empty()) {
            std::cout << " (first: " << r.first_counterexample << ")";
        }
        std::cout << "\n";
        if (g.verbose) {
            std::cout << "    " << r.statement << "\n";
        }
    }
    return ok ? kOk : kNegative;
}

int cmd_sample(const Globals &g, const std::string &class_name, int n, const std::string &output) {
    GateClass c = class_argument(class_name);
    std::mt19937_64 rng(g.seed);
    Gate gate = random_member(c, n, rng);
    std::string text = write_rgt(gate, "random member of " + c.name() + ", seed " + std::to_string(g.seed));
    if (output.empty()) {
        std::cout << text;
    } else {
        write_text_file(output, text);
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Classify, synthesize and verify reversible gates"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    g.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_flag("--loose", g.loose, "Ancillas may end in any input-independent state");
    app.add_flag("-v,--verbose", g.verbose, "Print per-gate and per-property detail");
    app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker threads for the brute census")->check(CLI::PositiveNumber);

    std::vector<std::string> files;
    std::string target, circuit, class_name, output, bits, mode = "formula";
    int n = 3;

    auto *classify = app.add_subcommand("classify", "Print the class generated by the given gates");
    classify->add_option("gates", files, ".rgt files")->required();

    auto *member = app.add_subcommand("member", "Decide whether the generators generate the target");
    member->add_option("target", target, "Target .rgt")->required();
    member->add_option("generators", files, "Generator .rgt files")->required();

    auto *synth = app.add_subcommand("synth", "Synthesize a verified circuit for a target over a class");
    synth->add_option("target", target, "Target .rgt")->required();
    synth->add_option("class", class_name, "Class name, e.g. FREDKIN or T4+NOT")->required();
    synth->add_option("output", output, "Output .rgc (stdout when omitted)");

    auto *verify_cmd = app.add_subcommand("verify", "Check that a circuit implements a target");
    verify_cmd->add_option("circuit", circuit, "Circuit .rgc")->required();
    verify_cmd->add_option("target", target, "Target .rgt")->required();

    auto *simulate_cmd = app.add_subcommand("simulate", "Run a circuit on one input");
    simulate_cmd->add_option("circuit", circuit, "Circuit .rgc")->required();
    simulate_cmd->add_option("bits", bits, "Data bits, or all wires")->required();

    auto *census = app.add_subcommand("census", "Class sizes and generator counts");
    census->add_option("n", n, "Number of bits")->required()->check(CLI::PositiveNumber);
    census->add_option("--mode", mode, "formula, brute or compare")
        ->check(CLI::IsMember({"formula", "brute", "compare"}))
        ->capture_default_str();

    auto *props = app.add_subcommand("props", "Run the exhaustive property suite");
    props->add_option("n", n, "Width, at most 4")->required()->check(CLI::Range(1, 4));

    auto *sample = app.add_subcommand("sample", "Write a random member of a class");
    sample->add_option("class", class_name, "Class name")->required();
    sample->add_option("n", n, "Number of bits")->required()->check(CLI::Range(1, 16));
    sample->add_option("-o,--output", output, "Output .rgt (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*classify) {
            return cmd_classify(g, files);
        }
        if (*member) {
            return cmd_member(g, target, files);
        }
        if (*synth) {
            return cmd_synth(g, target, class_name, output);
        }
        if (*verify_cmd) {
            return cmd_verify(g, circuit, target);
        }
        if (*simulate_cmd) {
            return cmd_simulate(g, circuit, bits);
        }
        if (*census) {
            return cmd_census(g, n, mode);
        }
        if (*props) {
            return cmd_props(g, n);
        }
        if (*sample) {
            return cmd_sample(g, class_name, n, output);
        }
    } catch (const RevError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kUsage;
}
