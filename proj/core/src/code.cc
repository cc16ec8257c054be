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

#include "lddqec/code.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lddqec {

std::string format_syndrome(Syndrome s, size_t width) {
    std::string out(width, '0');
    for (size_t i = 0; i < width; i++) {
        if ((s >> i) & 1) {
            out[i] = '1';
        }
    }
    return out;
}

Syndrome parse_syndrome(std::string_view text, size_t width) {
    if (text.size() != width) {
        throw std::invalid_argument("syndrome '" + std::string(text) + "' has length " +
                                    std::to_string(text.size()) + ", expected " + std::to_string(width));
    }
    Syndrome s = 0;
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            s |= Syndrome{1} << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("syndrome '" + std::string(text) + "' has illegal character at offset " +
                                        std::to_string(i));
        }
    }
    return s;
}

std::vector<std::string> validate_code(const StabilizerCode &code) {
    std::vector<std::string> out;
    auto fail = [&](std::string msg) { out.push_back(std::move(msg)); };

    if (code.n == 0 || code.n > kMaxQubits) {
        fail("n must lie in [1, 64], got " + std::to_string(code.n));
        return out;
    }
    if (code.k < 1 || code.k > code.n) {
        fail("k must lie in [1, n], got k=" + std::to_string(code.k) + " n=" + std::to_string(code.n));
        return out;
    }
    if (code.stabilizers.size() != code.n - code.k) {
        fail("expected " + std::to_string(code.n - code.k) + " stabilizer generators, got " +
             std::to_string(code.stabilizers.size()));
    }
    if (code.logical_x.size() != code.k || code.logical_z.size() != code.k) {
        fail("expected " + std::to_string(code.k) + " logical_x and logical_z operators, got " +
             std::to_string(code.logical_x.size()) + " and " + std::to_string(code.logical_z.size()));
    }
    for (const GeneratorSet *g : {&code.stabilizers, &code.logical_x, &code.logical_z}) {
        if (!g->empty() && g->num_qubits() != code.n) {
            fail("generator list is on " + std::to_string(g->num_qubits()) + " qubits, expected " +
                 std::to_string(code.n));
            return out;
        }
    }
    if (!out.empty()) {
        return out;
    }

    const auto &S = code.stabilizers;
    if (rank(S) != S.size()) {
        fail("stabilizer generators are not independent (rank " + std::to_string(rank(S)) + " < " +
             std::to_string(S.size()) + ")");
    }
    for (size_t i = 0; i < S.size(); i++) {
        for (size_t j = i + 1; j < S.size(); j++) {
            if (!commutes(S[i], S[j])) {
                fail("stabilizers " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
            }
        }
    }
    auto check_logical = [&](const GeneratorSet &L, const char *name) {
        for (size_t i = 0; i < L.size(); i++) {
            for (size_t j = 0; j < S.size(); j++) {
                if (!commutes(L[i], S[j])) {
                    fail(std::string(name) + "[" + std::to_string(i) + "] anticommutes with stabilizer " +
                         std::to_string(j));
                }
            }
            for (size_t j = i + 1; j < L.size(); j++) {
                if (!commutes(L[i], L[j])) {
                    fail(std::string(name) + "[" + std::to_string(i) + "] and " + name + "[" + std::to_string(j) +
                         "] anticommute");
                }
            }
        }
    };
    check_logical(code.logical_x, "logical_x");
    check_logical(code.logical_z, "logical_z");
    for (size_t i = 0; i < code.k; i++) {
        for (size_t j = 0; j < code.k; j++) {
            bool anti = !commutes(code.logical_x[i], code.logical_z[j]);
            if (anti != (i == j)) {
                fail("logical_x[" + std::to_string(i) + "] and logical_z[" + std::to_string(j) + "] " +
                     (anti ? "anticommute" : "commute"));
            }
        }
    }
    GeneratorSet all(code.n);
    for (const GeneratorSet *g : {&code.stabilizers, &code.logical_x, &code.logical_z}) {
        for (const auto &p : *g) {
            all.push_back(p);
        }
    }
    if (rank(all) != code.n + code.k) {
        fail("stabilizers and logicals are not jointly independent (rank " + std::to_string(rank(all)) +
             ", expected " + std::to_string(code.n + code.k) + ")");
    }
    return out;
}

void require_valid(const StabilizerCode &code) {
    auto errors = validate_code(code);
    if (!errors.empty()) {
        throw std::invalid_argument("invalid code: " + errors.front());
    }
}

Syndrome syndrome(const StabilizerCode &code, const PauliOperator &e) {
    if (e.num_qubits() != code.n) {
        throw std::invalid_argument("syndrome: error is on " + std::to_string(e.num_qubits()) +
                                    " qubits, code has " + std::to_string(code.n));
    }
    Syndrome s = 0;
    for (size_t i = 0; i < code.stabilizers.size(); i++) {
        s |= Syndrome{anticommutes_unchecked(e, code.stabilizers[i])} << i;
    }
    return s;
}

uint64_t logical_label(const StabilizerCode &code, const PauliOperator &e) {
    if (e.num_qubits() != code.n) {
        throw std::invalid_argument("logical_label: error is on " + std::to_string(e.num_qubits()) +
                                    " qubits, code has " + std::to_string(code.n));
    }
    uint64_t label = 0;
    for (size_t i = 0; i < code.k; i++) {
        label |= uint64_t{anticommutes_unchecked(e, code.logical_x[i])} << (2 * i);
        label |= uint64_t{anticommutes_unchecked(e, code.logical_z[i])} << (2 * i + 1);
    }
    return label;
}

StabilizerCode trivial_code(size_t k) {
    StabilizerCode code;
    code.n = k;
    code.k = k;
    code.stabilizers = GeneratorSet(k);
    code.logical_x = GeneratorSet(k);
    code.logical_z = GeneratorSet(k);
    for (size_t i = 0; i < k; i++) {
        code.logical_x.push_back(PauliOperator(k, uint64_t{1} << i, 0));
        code.logical_z.push_back(PauliOperator(k, 0, uint64_t{1} << i));
    }
    return code;
}

DecoderMap::DecoderMap(std::vector<PauliOperator> table) : table_(std::move(table)) {
    if (table_.empty() || !std::has_single_bit(table_.size())) {
        throw std::invalid_argument("DecoderMap: table size " + std::to_string(table_.size()) +
                                    " is not a power of two");
    }
}

void DecoderMap::override_entry(const StabilizerCode &code, const PauliOperator &e) {
    Syndrome s = syndrome(code, e);
    if (s >= table_.size()) {
        throw std::invalid_argument("override_entry: decoder does not match the code");
    }
    table_[s] = e;
}

std::vector<std::string> validate_decoder(const StabilizerCode &code, const DecoderMap &decoder) {
    std::vector<std::string> out;
    size_t r = code.num_checks();
    size_t expected = size_t{1} << r;
    if (decoder.size() != expected) {
        out.push_back("decoder has " + std::to_string(decoder.size()) + " entries, expected " +
                      std::to_string(expected));
        return out;
    }
    for (Syndrome s = 0; s < expected; s++) {
        const auto &rec = decoder[s];
        if (rec.num_qubits() != code.n) {
            out.push_back("syndrome " + format_syndrome(s, r) + ": recovery is on " +
                          std::to_string(rec.num_qubits()) + " qubits");
            continue;
        }
        if (s == 0 && !rec.is_identity()) {
            out.push_back("syndrome " + format_syndrome(s, r) + ": trivial syndrome must map to identity, got " +
                          format_pauli(rec));
            continue;
        }
        Syndrome got = syndrome(code, rec);
        if (got != s) {
            out.push_back("syndrome " + format_syndrome(s, r) + ": recovery " + format_pauli(rec) +
                          " has syndrome " + format_syndrome(got, r));
        }
    }
    return out;
}

namespace {

// Per-qubit syndrome contributions for X and Z letters.
struct SyndromeTables {
    std::vector<Syndrome> x;
    std::vector<Syndrome> z;
    std::vector<uint64_t> lx;
    std::vector<uint64_t> lz;

    explicit SyndromeTables(const StabilizerCode &code) : x(code.n), z(code.n), lx(code.n), lz(code.n) {
        for (size_t q = 0; q < code.n; q++) {
            x[q] = syndrome(code, PauliOperator(code.n, uint64_t{1} << q, 0));
            z[q] = syndrome(code, PauliOperator(code.n, 0, uint64_t{1} << q));
            lx[q] = logical_label(code, PauliOperator(code.n, uint64_t{1} << q, 0));
            lz[q] = logical_label(code, PauliOperator(code.n, 0, uint64_t{1} << q));
        }
    }
};

// Byte string whose lexicographic order realizes the tie-break among equal-weight Paulis.
std::string tie_key(size_t n, uint64_t x, uint64_t z, TieBreak tb) {
    auto digit = [&](size_t q) -> char {
        unsigned xb = (x >> q) & 1;
        unsigned zb = (z >> q) & 1;
        return static_cast<char>(xb ? (zb ? 2 : 1) : (zb ? 3 : 0));
    };
    std::string key;
    if (tb == TieBreak::kLexicographic) {
        for (size_t q = 0; q < n; q++) {
            key.push_back(digit(q));
        }
        return key;
    }
    std::string letters;
    for (size_t q = n; q-- > 0;) {
        if (digit(q) != 0) {
            key.push_back(static_cast<char>(n - 1 - q));
            letters.push_back(digit(q));
        }
    }
    return key + letters;
}

}  // namespace

DecoderMap min_weight_decoder(const StabilizerCode &code, TieBreak tie_break) {
    require_valid(code);
    size_t r = code.num_checks();
    if (code.n > 2 * kEnumerationBudgetQubits || r > 2 * kEnumerationBudgetQubits) {
        throw BudgetExceeded("min_weight_decoder: code too large for table construction");
    }
    size_t count = size_t{1} << r;
    SyndromeTables tab(code);
    std::vector<PauliOperator> table(count);
    std::vector<std::string> best_key(count);
    std::vector<bool> seen(count, false);
    std::vector<bool> filled(count, false);
    size_t remaining = count;
    for (size_t w = 0; w <= code.n && remaining > 0; w++) {
        std::vector<Syndrome> touched;
        for_each_pauli_of_weight(code.n, w, [&](uint64_t x, uint64_t z) {
            Syndrome s = 0;
            for (uint64_t b = x; b; b &= b - 1) {
                s ^= tab.x[std::countr_zero(b)];
            }
            for (uint64_t b = z; b; b &= b - 1) {
                s ^= tab.z[std::countr_zero(b)];
            }
            if (filled[s]) {
                return;
            }
            std::string key = tie_key(code.n, x, z, tie_break);
            if (!seen[s] || key < best_key[s]) {
                if (!seen[s]) {
                    seen[s] = true;
                    touched.push_back(s);
                }
                best_key[s] = std::move(key);
                table[s] = PauliOperator(code.n, x, z);
            }
        });
        for (Syndrome s : touched) {
            filled[s] = true;
            remaining--;
        }
        if (w >= kEnumerationBudgetQubits && remaining > 0) {
            throw BudgetExceeded("min_weight_decoder: weight budget exhausted");
        }
    }
    return DecoderMap(std::move(table));
}

DecouplingGroup::DecouplingGroup(GeneratorSet generators) : gens_(std::move(generators)) {
    if (gens_.empty()) {
        throw std::invalid_argument("DecouplingGroup: no generators");
    }
    if (rank(gens_) == 0) {
        throw std::invalid_argument("DecouplingGroup: all generators are the identity");
    }
}

bool DecouplingGroup::suppresses(const PauliOperator &e) const {
    if (e.num_qubits() != gens_.num_qubits()) {
        throw std::invalid_argument("suppresses: error is on " + std::to_string(e.num_qubits()) +
                                    " qubits, group acts on " + std::to_string(gens_.num_qubits()));
    }
    for (const auto &g : gens_) {
        if (anticommutes_unchecked(e, g)) {
            return true;
        }
    }
    return false;
}

DecouplingGroup dress_generator(const DecouplingGroup &dd, size_t index, const PauliOperator &s) {
    const auto &gens = dd.generators();
    if (index >= gens.size()) {
        throw std::out_of_range("dress_generator: index " + std::to_string(index) + " out of range for " +
                                std::to_string(gens.size()) + " generators");
    }
    std::vector<PauliOperator> members(gens.begin(), gens.end());
    members[index] = multiply(members[index], s);
    return DecouplingGroup(GeneratorSet(gens.num_qubits(), std::move(members)));
}

DecouplingGroup logical_group(const StabilizerCode &code) {
    GeneratorSet g(code.n);
    for (size_t i = 0; i < code.k; i++) {
        g.push_back(code.logical_x[i]);
        g.push_back(code.logical_z[i]);
    }
    return DecouplingGroup(std::move(g));
}

Classification classify(const StabilizerCode &code, const DecoderMap &decoder, const DecouplingGroup &dd,
                        const PauliOperator &e) {
    Classification c;
    Syndrome s = syndrome(code, e);
    if (s >= decoder.size()) {
        throw std::invalid_argument("classify: decoder does not match the code");
    }
    c.logical_label = logical_label(code, e);
    c.is_zero_syndrome = s == 0;
    c.is_stabilizer = c.is_zero_syndrome && c.logical_label == 0;
    PauliOperator residual = multiply(decoder[s], e);
    c.is_correctable = logical_label(code, residual) == 0;
    c.is_suppressed = dd.suppresses(e);
    return c;
}

size_t code_distance(const StabilizerCode &code) {
    if (code.k == 0) {
        throw std::invalid_argument("code_distance: undefined for k = 0");
    }
    if (code.n > kEnumerationBudgetQubits) {
        throw BudgetExceeded("code_distance: n = " + std::to_string(code.n) + " exceeds the enumeration budget");
    }
    SyndromeTables tab(code);
    for (size_t w = 1; w <= code.n; w++) {
        bool found = false;
        for_each_pauli_of_weight(code.n, w, [&](uint64_t x, uint64_t z) {
            if (found) {
                return;
            }
            Syndrome s = 0;
            uint64_t label = 0;
            for (uint64_t b = x; b; b &= b - 1) {
                s ^= tab.x[std::countr_zero(b)];
                label ^= tab.lx[std::countr_zero(b)];
            }
            for (uint64_t b = z; b; b &= b - 1) {
                s ^= tab.z[std::countr_zero(b)];
                label ^= tab.lz[std::countr_zero(b)];
            }
            found = s == 0 && label != 0;
        });
        if (found) {
            return w;
        }
    }
    throw std::logic_error("code_distance: no nontrivial logical found");
}

std::optional<StabilizerCode> resolve_stabilizer_order(const StabilizerCode &code,
                                                       std::span<const std::pair<Syndrome, PauliOperator>> rows) {
    size_t r = code.stabilizers.size();
    // For each row and generator, precompute whether the recovery anticommutes.
    std::vector<std::vector<bool>> anti(rows.size(), std::vector<bool>(r));
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t j = 0; j < r; j++) {
            anti[i][j] = !commutes(rows[i].second, code.stabilizers[j]);
        }
    }
    std::vector<size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (size_t i = 0; i < rows.size() && ok; i++) {
            for (size_t bit = 0; bit < r; bit++) {
                if (anti[i][perm[bit]] != (((rows[i].first >> bit) & 1) != 0)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            StabilizerCode out = code;
            std::vector<PauliOperator> members;
            for (size_t bit = 0; bit < r; bit++) {
                members.push_back(code.stabilizers[perm[bit]]);
            }
            out.stabilizers = GeneratorSet(code.n, std::move(members));
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

StabilizerCode random_stabilizer_code(size_t n, size_t k, std::mt19937_64 &rng) {
    if (n == 0 || n > kMaxQubits || k < 1 || k > n) {
        throw std::invalid_argument("random_stabilizer_code: need 1 <= k <= n <= 64");
    }
    uint64_t m = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    std::vector<PauliOperator> pool;
    while (true) {
        pool.clear();
        GeneratorSet span(n);
        for (size_t i = 0; i < 2 * n; i++) {
            PauliOperator p(n, rng() & m, rng() & m);
            pool.push_back(p);
            span.push_back(p);
        }
        if (rank(span) == 2 * n) {
            break;
        }
    }
    // Symplectic Gram-Schmidt into n hyperbolic pairs.
    std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
    while (!pool.empty()) {
        PauliOperator a = pool.front();
        pool.erase(pool.begin());
        auto it = std::find_if(pool.begin(), pool.end(),
                               [&](const PauliOperator &v) { return anticommutes_unchecked(a, v); });
        PauliOperator b = *it;
        pool.erase(it);
        for (auto &v : pool) {
            bool va = anticommutes_unchecked(v, a);
            bool vb = anticommutes_unchecked(v, b);
            if (vb) {
                v *= a;
            }
            if (va) {
                v *= b;
            }
        }
        pairs.emplace_back(a, b);
    }
    StabilizerCode code;
    code.n = n;
    code.k = k;
    code.stabilizers = GeneratorSet(n);
    code.logical_x = GeneratorSet(n);
    code.logical_z = GeneratorSet(n);
    for (size_t i = 0; i < n - k; i++) {
        code.stabilizers.push_back(pairs[i].first);
    }
    for (size_t i = n - k; i < n; i++) {
        code.logical_x.push_back(pairs[i].second);
        code.logical_z.push_back(pairs[i].first);
    }
    return code;
}

}  // namespace lddqec
