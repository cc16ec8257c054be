// Copyright 2026 The lddqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lddqec/code_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lddqec {

namespace {

struct Line {
    size_t number;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::istream &in) {
    std::vector<Line> lines;
    std::string text;
    size_t number = 0;
    while (std::getline(in, text)) {
        number++;
        if (auto hash = text.find('#'); hash != std::string::npos) {
            text.resize(hash);
        }
        std::istringstream ss(text);
        Line line{number, {}};
        std::string w;
        while (ss >> w) {
            line.words.push_back(w);
        }
        if (!line.words.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

[[noreturn]] void fail(const std::string &source, size_t line, const std::string &msg) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + msg);
}

PauliOperator pauli_at(const std::string &source, const Line &line, const std::string &text, size_t n) {
    PauliOperator p;
    try {
        p = parse_pauli(text);
    } catch (const std::invalid_argument &e) {
        fail(source, line.number, e.what());
    }
    if (n != 0 && p.num_qubits() != n) {
        fail(source, line.number,
             "Pauli '" + text + "' has " + std::to_string(p.num_qubits()) + " qubits, expected " + std::to_string(n));
    }
    return p;
}

size_t int_at(const std::string &source, const Line &line) {
    if (line.words.size() != 2) {
        fail(source, line.number, "expected '" + line.words[0] + " <int>'");
    }
    const auto &w = line.words[1];
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
        fail(source, line.number, "'" + w + "' is not a non-negative integer");
    }
    return v;
}

std::ifstream open(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw FileMissing("cannot open '" + path.string() + "'");
    }
    return in;
}

}  // namespace

StabilizerCode read_code(std::istream &in, const std::string &source) {
    auto lines = tokenize(in);
    StabilizerCode code;
    bool have_n = false;
    bool have_k = false;
    std::vector<PauliOperator> stab, lx, lz;
    for (const auto &line : lines) {
        const auto &key = line.words[0];
        if (key == "n") {
            code.n = int_at(source, line);
            have_n = true;
            if (code.n == 0 || code.n > kMaxQubits) {
                fail(source, line.number, "n must lie in [1, 64]");
            }
            continue;
        }
        if (key == "k") {
            code.k = int_at(source, line);
            have_k = true;
            continue;
        }
        if (!have_n || !have_k) {
            fail(source, line.number, "'n' and 'k' must precede operator lines");
        }
        if (line.words.size() != 2) {
            fail(source, line.number, "expected '" + key + " <PauliString>'");
        }
        PauliOperator p = pauli_at(source, line, line.words[1], code.n);
        if (key == "stabilizer") {
            if (!lx.empty() || !lz.empty()) {
                fail(source, line.number, "stabilizer lines must precede logical lines");
            }
            stab.push_back(p);
        } else if (key == "logical_x") {
            if (!lz.empty()) {
                fail(source, line.number, "logical_x lines must precede logical_z lines");
            }
            lx.push_back(p);
        } else if (key == "logical_z") {
            lz.push_back(p);
        } else {
            fail(source, line.number, "unknown keyword '" + key + "'");
        }
    }
    if (!have_n || !have_k) {
        throw ParseError(source + ": missing 'n' or 'k' line");
    }
    code.stabilizers = GeneratorSet(code.n, std::move(stab));
    code.logical_x = GeneratorSet(code.n, std::move(lx));
    code.logical_z = GeneratorSet(code.n, std::move(lz));
    auto errors = validate_code(code);
    if (!errors.empty()) {
        throw ParseError(source + ": invalid code: " + errors.front());
    }
    return code;
}

DecoderMap read_decoder(std::istream &in, const StabilizerCode &code, const std::string &source) {
    auto lines = tokenize(in);
    size_t r = code.num_checks();
    size_t count = size_t{1} << r;
    std::vector<PauliOperator> table(count);
    std::vector<size_t> defined_at(count, 0);
    for (const auto &line : lines) {
        if (line.words.size() != 2) {
            fail(source, line.number, "expected '<syndrome> <PauliString>'");
        }
        Syndrome s = 0;
        try {
            s = parse_syndrome(line.words[0], r);
        } catch (const std::invalid_argument &e) {
            fail(source, line.number, e.what());
        }
        PauliOperator p = pauli_at(source, line, line.words[1], code.n);
        if (defined_at[s] != 0) {
            fail(source, line.number,
                 "syndrome " + line.words[0] + " already defined on line " + std::to_string(defined_at[s]));
        }
        if (s == 0 && !p.is_identity()) {
            fail(source, line.number, "trivial syndrome must map to the identity, got " + line.words[1]);
        }
        Syndrome got = syndrome(code, p);
        if (got != s) {
            fail(source, line.number,
                 "consistency: recovery " + line.words[1] + " has syndrome " + format_syndrome(got, r) +
                     ", not " + line.words[0]);
        }
        defined_at[s] = line.number;
        table[s] = p;
    }
    for (Syndrome s = 0; s < count; s++) {
        if (defined_at[s] == 0) {
            throw ParseError(source + ": totality: syndrome " + format_syndrome(s, r) + " has no recovery");
        }
    }
    return DecoderMap(std::move(table));
}

DecouplingGroup read_dd(std::istream &in, const std::string &source) {
    auto lines = tokenize(in);
    std::vector<PauliOperator> gens;
    size_t n = 0;
    for (const auto &line : lines) {
        if (line.words[0] != "generator" || line.words.size() != 2) {
            fail(source, line.number, "expected 'generator <PauliString>'");
        }
        PauliOperator p = pauli_at(source, line, line.words[1], n);
        n = p.num_qubits();
        gens.push_back(p);
    }
    if (gens.empty()) {
        throw ParseError(source + ": no generators");
    }
    try {
        return DecouplingGroup(GeneratorSet(n, std::move(gens)));
    } catch (const std::invalid_argument &e) {
        throw ParseError(source + ": " + e.what());
    }
}

StabilizerCode load_code(const std::filesystem::path &path) {
    auto in = open(path);
    return read_code(in, path.string());
}

DecoderMap load_decoder(const std::filesystem::path &path, const StabilizerCode &code) {
    auto in = open(path);
    return read_decoder(in, code, path.string());
}

DecouplingGroup load_dd(const std::filesystem::path &path) {
    auto in = open(path);
    return read_dd(in, path.string());
}

void write_code(std::ostream &out, const StabilizerCode &code) {
    out << "n " << code.n << "\n";
    out << "k " << code.k << "\n";
    for (const auto &s : code.stabilizers) {
        out << "stabilizer " << format_pauli(s) << "\n";
    }
    for (const auto &p : code.logical_x) {
        out << "logical_x " << format_pauli(p) << "\n";
    }
    for (const auto &p : code.logical_z) {
        out << "logical_z " << format_pauli(p) << "\n";
    }
}

void write_decoder(std::ostream &out, const StabilizerCode &code, const DecoderMap &decoder) {
    for (Syndrome s = 0; s < decoder.size(); s++) {
        out << format_syndrome(s, code.num_checks()) << " " << format_pauli(decoder[s]) << "\n";
    }
}

void write_dd(std::ostream &out, const DecouplingGroup &dd) {
    for (const auto &g : dd.generators()) {
        out << "generator " << format_pauli(g) << "\n";
    }
}

void store_code(const std::filesystem::path &path, const StabilizerCode &code) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    write_code(out, code);
}

}  // namespace lddqec
