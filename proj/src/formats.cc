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

#include "revlattice/formats.h"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "revlattice/error.h"

namespace revlattice {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Splits text into non-empty lines of whitespace-separated tokens, with
// '#' comments removed. "->" and ':' are kept as separate tokens.
std::vector<Line> tokenize(const std::string &text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        number++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.resize(hash);
        }
        std::string spaced;
        for (std::size_t i = 0; i < raw.size(); i++) {
            if (raw.compare(i, 2, "->") == 0) {
                spaced += " -> ";
                i++;
            } else if (raw[i] == ':' || raw[i] == '=') {
                spaced += std::string(" ") + raw[i] + " ";
            } else {
                spaced += raw[i];
            }
        }
        std::istringstream ls(spaced);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) {
            line.tokens.push_back(tok);
        }
        if (!line.tokens.empty()) {
            out.push_back(std::move(line));
        }
    }
    return out;
}

[[noreturn]] void fail(const Line &line, const std::string &msg) {
    throw RevError(ErrorCode::ParseError, "line " + std::to_string(line.number) + ": " + msg);
}

int parse_int(const Line &line, const std::string &tok) {
    if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos) {
        fail(line, "expected a non-negative integer, got '" + tok + "'");
    }
    return std::stoi(tok);
}

bool is_arrow_row(const Line &line) {
    return line.tokens.size() == 3 && line.tokens[1] == "->";
}

// Reads 2^n arrow rows starting at lines[pos]; n comes from `arity` or, when
// it is 0, from the first row.
Gate read_arrow_rows(const std::vector<Line> &lines, std::size_t &pos, int arity) {
    if (pos >= lines.size() || !is_arrow_row(lines[pos])) {
        throw RevError(ErrorCode::ParseError, "expected truth-table rows");
    }
    if (arity == 0) {
        arity = static_cast<int>(lines[pos].tokens[0].size());
    }
    if (arity < 1 || arity > kDefaultArityCap) {
        fail(lines[pos], "unsupported arity " + std::to_string(arity));
    }
    std::size_t count = std::size_t{1} << arity;
    std::vector<std::pair<Word, Word>> rows;
    while (pos < lines.size() && is_arrow_row(lines[pos]) && rows.size() < count) {
        const Line &line = lines[pos];
        const std::string &a = line.tokens[0];
        const std::string &b = line.tokens[2];
        if ((int)a.size() != arity || (int)b.size() != arity) {
            throw RevError(ErrorCode::ArityMismatch,
                           "line " + std::to_string(line.number) + ": row width differs from " + std::to_string(arity));
        }
        try {
            rows.emplace_back(parse_bit_string(a), parse_bit_string(b));
        } catch (const RevError &e) {
            fail(line, e.what());
        }
        pos++;
    }
    return Gate::from_rows(arity, rows);
}

}  // namespace

Gate parse_rgt(const std::string &text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) {
        throw RevError(ErrorCode::ParseError, "empty truth table");
    }
    const Line &head = lines[0];
    std::size_t pos = 1;
    Gate g;
    if (head.tokens[0] == "bits") {
        if (head.tokens.size() != 2) {
            fail(head, "expected 'bits N'");
        }
        int n = parse_int(head, head.tokens[1]);
        if (n < 1 || n > kDefaultArityCap) {
            fail(head, "unsupported arity");
        }
        g = read_arrow_rows(lines, pos, n);
    } else if (head.tokens[0] == "perm") {
        if (head.tokens.size() < 3 || head.tokens[2] != ":") {
            fail(head, "expected 'perm N: i0 i1 ...'");
        }
        int n = parse_int(head, head.tokens[1]);
        if (n < 1 || n > kDefaultArityCap) {
            fail(head, "unsupported arity");
        }
        std::vector<std::uint32_t> t;
        for (std::size_t i = 3; i < head.tokens.size(); i++) {
            t.push_back(static_cast<std::uint32_t>(parse_int(head, head.tokens[i])));
        }
        g = Gate::from_table(n, std::move(t));
    } else {
        fail(head, "expected 'bits N' or 'perm N:'");
    }
    if (pos < lines.size()) {
        fail(lines[pos], "unexpected content after the table");
    }
    return g;
}

std::string write_rgt(const Gate &g, const std::string &comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string l;
        while (std::getline(cs, l)) {
            out << "# " << l << "\n";
        }
    }
    int n = g.arity();
    out << "bits " << n << "\n";
    for (Word x = 0; x < g.size(); x++) {
        out << to_bit_string(x, n) << " -> " << to_bit_string(g(x), n) << "\n";
    }
    return out.str();
}

Circuit parse_rgc(const std::string &text) {
    std::vector<Line> lines = tokenize(text);
    int width = -1;
    int data = -1;
    std::map<int, int> ancillas;
    std::map<std::string, PrimitiveGate> tables;
    struct PendingOp {
        const Line *line;
        PrimitiveGate gate;
        std::vector<int> wires;
    };
    std::vector<PendingOp> ops;
    std::size_t pos = 0;
    while (pos < lines.size()) {
        const Line &line = lines[pos];
        const std::string &kw = line.tokens[0];
        if (kw == "width" || kw == "data") {
            if (line.tokens.size() != 2) {
                fail(line, "expected '" + kw + " N'");
            }
            int v = parse_int(line, line.tokens[1]);
            (kw == "width" ? width : data) = v;
            pos++;
        } else if (kw == "ancilla") {
            if (line.tokens.size() != 4 || line.tokens[2] != "=" ||
                (line.tokens[3] != "0" && line.tokens[3] != "1")) {
                fail(line, "expected 'ancilla W = B'");
            }
            int w = parse_int(line, line.tokens[1]);
            if (ancillas.count(w)) {
                fail(line, "ancilla " + std::to_string(w) + " declared twice");
            }
            ancillas[w] = line.tokens[3] == "1";
            pos++;
        } else if (kw == "deftable") {
            if (line.tokens.size() != 2) {
                fail(line, "expected 'deftable LABEL'");
            }
            const std::string &label = line.tokens[1];
            bool builtin = true;
            try {
                PrimitiveGate::parse_named(label);
            } catch (const RevError &) {
                builtin = false;
            }
            if (builtin || tables.count(label)) {
                fail(line, "label '" + label + "' already names a gate");
            }
            pos++;
            Gate g = read_arrow_rows(lines, pos, 0);
            tables.emplace(label, PrimitiveGate::user(label, std::move(g)));
        } else if (kw == "gate") {
            if (line.tokens.size() < 2) {
                fail(line, "expected 'gate NAME w1 ...'");
            }
            const std::string &name = line.tokens[1];
            auto it = tables.find(name);
            PrimitiveGate gate = it != tables.end() ? it->second : PrimitiveGate::parse_named(name);
            std::vector<int> wires;
            for (std::size_t i = 2; i < line.tokens.size(); i++) {
                wires.push_back(parse_int(line, line.tokens[i]) - 1);
            }
            ops.push_back(PendingOp{&line, gate, std::move(wires)});
            pos++;
        } else {
            fail(line, "unknown keyword '" + kw + "'");
        }
    }
    if (width < 1 || data < 1 || data > width) {
        throw RevError(ErrorCode::ParseError, "missing or inconsistent 'width'/'data' header");
    }
    Circuit c(data);
    for (int w = data + 1; w <= width; w++) {
        auto it = ancillas.find(w);
        if (it == ancillas.end()) {
            throw RevError(ErrorCode::ParseError, "ancilla wire " + std::to_string(w) + " has no initial value");
        }
        c.add_ancilla(it->second);
    }
    if ((int)ancillas.size() != width - data) {
        throw RevError(ErrorCode::ParseError, "ancilla declared on a data wire or beyond the width");
    }
    for (PendingOp &op : ops) {
        try {
            c.append(op.gate, std::move(op.wires));
        } catch (const RevError &e) {
            fail(*op.line, e.what());
        }
    }
    return c;
}

std::string write_rgc(const Circuit &c, const std::string &comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string l;
        while (std::getline(cs, l)) {
            out << "# " << l << "\n";
        }
    }
    out << "width " << c.width() << "\n";
    out << "data " << c.data_wires() << "\n";
    for (int w = c.data_wires(); w < c.width(); w++) {
        out << "ancilla " << w + 1 << " = " << c.ancilla_init(w) << "\n";
    }
    std::map<std::string, bool> defined;
    for (const Op &op : c.ops()) {
        if (op.gate.kind() == PrimitiveKind::User && !defined[op.gate.label()]) {
            defined[op.gate.label()] = true;
            const Gate &g = op.gate.table();
            out << "deftable " << op.gate.label() << "\n";
            for (Word x = 0; x < g.size(); x++) {
                out << to_bit_string(x, g.arity()) << " -> " << to_bit_string(g(x), g.arity()) << "\n";
            }
        }
    }
    for (const Op &op : c.ops()) {
        out << "gate " << op.gate.name();
        for (int w : op.wires) {
            out << " " << w + 1;
        }
        out << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw RevError(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw RevError(ErrorCode::ParseError, "cannot write '" + path + "'");
    }
    out << text;
}

}  // namespace revlattice
