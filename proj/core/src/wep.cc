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

#include "lddqec/wep.h"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace lddqec {

namespace {

constexpr std::string_view kQecTags[] = {
    "A",     "St",    "SlashedSt", "S",       "notS",      "C",   "notC",
    "D",     "L",     "notS-St",   "S-St",    "notS-notC", "notS-C", "S-notC",
    "S-C",   "notS-D", "S-D",      "notC-D",  "S-SlashedSt", "notS-SlashedSt",
};

constexpr std::string_view kQedTags[] = {
    "A",      "St",   "SlashedSt", "S",        "notS",        "D",
    "L",      "StL",  "notS-St",   "S-St",     "notS-D",      "S-D",
    "notS-L", "S-L",  "notS-StL",  "S-StL",    "S-SlashedSt", "notS-SlashedSt",
};

using Vec = std::vector<uint64_t>;

Vec add(const Vec &a, const Vec &b) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        c[i] = a[i] + b[i];
    }
    return c;
}

Vec sub(const Vec &a, const Vec &b) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        c[i] = a[i] - b[i];
    }
    return c;
}

// Greedy independent subset; suppression only depends on the span.
GeneratorSet independent_subset(const GeneratorSet &gens) {
    GeneratorSet out(gens.num_qubits());
    for (const auto &g : gens) {
        out.push_back(g);
        if (rank(out) < out.size()) {
            GeneratorSet trimmed(gens.num_qubits(), {out.members().begin(), out.members().end() - 1});
            out = std::move(trimmed);
        }
    }
    return out;
}

}  // namespace

std::string_view setting_name(Setting s) { return s == Setting::kQec ? "qec" : "qed"; }

std::span<const std::string_view> qec_tags() { return kQecTags; }
std::span<const std::string_view> qed_tags() { return kQedTags; }

const std::vector<uint64_t> &WepTable::at(std::string_view tag) const {
    auto it = coeffs.find(tag);
    if (it == coeffs.end()) {
        throw std::out_of_range("WEP table (" + std::string(setting_name(setting)) + ") has no tag '" +
                                std::string(tag) + "'");
    }
    return it->second;
}

CategoryCounts::CategoryCounts(size_t n_) : n(n_) {
    for (auto &v : by_category) {
        v.assign(n + 1, 0);
    }
}

CategoryCounts &CategoryCounts::operator+=(const CategoryCounts &other) {
    for (size_t c = 0; c < 8; c++) {
        for (size_t w = 0; w <= n; w++) {
            by_category[c][w] += other.by_category[c][w];
        }
    }
    return *this;
}

PauliEnumerator::PauliEnumerator(const StabilizerCode &code, const DecoderMap *decoder)
    : code_(code), setting_(decoder ? Setting::kQec : Setting::kQed) {
    require_valid(code_);
    if (code_.n > kEnumerationBudgetQubits) {
        throw BudgetExceeded("exhaustive enumeration over 4^" + std::to_string(code_.n) +
                             " Paulis exceeds the budget of n <= " + std::to_string(kEnumerationBudgetQubits));
    }
    size_t r = code_.num_checks();
    recovery_label_.assign(size_t{1} << r, 0);
    if (decoder) {
        auto errors = validate_decoder(code_, *decoder);
        if (!errors.empty()) {
            throw std::invalid_argument("invalid decoder: " + errors.front());
        }
        for (Syndrome s = 0; s < recovery_label_.size(); s++) {
            recovery_label_[s] = static_cast<uint32_t>(logical_label(code_, (*decoder)[s]));
        }
    }
    for (size_t l = 0; l < 4; l++) {
        letter_word_[l].assign(code_.n, 0);
    }
    for (size_t q = 0; q < code_.n; q++) {
        uint64_t bit = uint64_t{1} << q;
        PauliOperator x(code_.n, bit, 0);
        PauliOperator z(code_.n, 0, bit);
        uint64_t wx = syndrome(code_, x) | (logical_label(code_, x) << r);
        uint64_t wz = syndrome(code_, z) | (logical_label(code_, z) << r);
        letter_word_[0][q] = 0;
        letter_word_[1][q] = wx;
        letter_word_[2][q] = wx ^ wz;
        letter_word_[3][q] = wz;
    }
}

CategoryCounts PauliEnumerator::count_range(const DecouplingGroup &dd, uint64_t begin, uint64_t end) const {
    const size_t n = code_.n;
    if (dd.num_qubits() != n) {
        throw std::invalid_argument("decoupling group acts on " + std::to_string(dd.num_qubits()) +
                                    " qubits, code has " + std::to_string(n));
    }
    end = std::min(end, total());
    CategoryCounts out(n);
    if (begin >= end) {
        return out;
    }
    const size_t r = code_.num_checks();
    const size_t label_bits = 2 * code_.k;
    const size_t dd_shift = r + label_bits;
    GeneratorSet gens = independent_subset(dd.generators());
    if (dd_shift + gens.size() > 64) {
        throw BudgetExceeded("packed classification word does not fit in 64 bits");
    }

    // Per-qubit words including the decoupling bits.
    std::array<std::vector<uint64_t>, 4> word = letter_word_;
    for (size_t q = 0; q < n; q++) {
        uint64_t bit = uint64_t{1} << q;
        for (size_t l = 1; l < 4; l++) {
            PauliOperator p(n, (l == 1 || l == 2) ? bit : 0, (l == 2 || l == 3) ? bit : 0);
            for (size_t g = 0; g < gens.size(); g++) {
                if (anticommutes_unchecked(p, gens[g])) {
                    word[l][q] |= uint64_t{1} << (dd_shift + g);
                }
            }
        }
    }

    // Split the qubits into a low block (inner loop) and a high block (outer loop).
    const size_t h = n / 2;
    auto build = [&](size_t first, size_t count, std::vector<uint64_t> &words, std::vector<uint8_t> &weights) {
        size_t size = size_t{1} << (2 * count);
        words.assign(size, 0);
        weights.assign(size, 0);
        for (size_t i = 1; i < size; i++) {
            // Extend from the entry with the top nonzero digit removed.
            size_t top = (std::bit_width(i) - 1) / 2;
            size_t digit = (i >> (2 * top)) & 3;
            size_t rest = i & ~(size_t{3} << (2 * top));
            words[i] = words[rest] ^ word[digit][first + top];
            weights[i] = static_cast<uint8_t>(weights[rest] + 1);
        }
    };
    std::vector<uint64_t> lo_word, hi_word;
    std::vector<uint8_t> lo_wt, hi_wt;
    build(0, h, lo_word, lo_wt);
    build(h, n - h, hi_word, hi_wt);

    const uint64_t rmask = (uint64_t{1} << r) - 1;
    const uint64_t lmask = (uint64_t{1} << label_bits) - 1;
    const size_t stride = n + 1;
    const uint32_t *reclab = recovery_label_.data();
    std::vector<uint64_t> hist(8 * stride, 0);
    uint64_t *hp = hist.data();

    const uint64_t lo_size = uint64_t{1} << (2 * h);
    uint64_t hi = begin >> (2 * h);
    uint64_t lo = begin & (lo_size - 1);
    uint64_t remaining = end - begin;
    while (remaining > 0) {
        const uint64_t hw = hi_word[hi];
        const unsigned hwt = hi_wt[hi];
        uint64_t stop = std::min<uint64_t>(lo_size, lo + remaining);
        remaining -= stop - lo;
        for (; lo < stop; lo++) {
            uint64_t w = hw ^ lo_word[lo];
            uint64_t sig = w & rmask;
            uint32_t lab = static_cast<uint32_t>((w >> r) & lmask);
            unsigned cls = (static_cast<unsigned>(sig != 0) << 1) | static_cast<unsigned>(lab != reclab[sig]);
            unsigned cat = cls | (static_cast<unsigned>((w >> dd_shift) != 0) << 2);
            hp[cat * stride + hwt + lo_wt[lo]]++;
        }
        lo = 0;
        hi++;
    }
    for (size_t c = 0; c < 8; c++) {
        for (size_t w = 0; w <= n; w++) {
            out.by_category[c][w] = hist[c * stride + w];
        }
    }
    return out;
}

CategoryCounts PauliEnumerator::count(const DecouplingGroup &dd, unsigned threads) const {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    uint64_t n_total = total();
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(1, n_total / 4096)));
    if (threads <= 1) {
        return count_range(dd, 0, n_total);
    }
    std::vector<CategoryCounts> partial(threads);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; t++) {
        uint64_t b = n_total / threads * t;
        uint64_t e = t + 1 == threads ? n_total : n_total / threads * (t + 1);
        pool.emplace_back([&, t, b, e]() {
            try {
                partial[t] = count_range(dd, b, e);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    CategoryCounts sum(code_.n);
    for (const auto &p : partial) {
        sum += p;
    }
    return sum;
}

WepTable make_table(size_t k, Setting setting, const CategoryCounts &counts) {
    WepTable t;
    t.n = counts.n;
    t.k = k;
    t.setting = setting;
    const auto &u = counts.by_category;
    auto U = [&](unsigned c) { return u[c]; };
    auto S = [&](unsigned c) { return u[c + 4]; };

    Vec st_u = U(kStabilizer), st_s = S(kStabilizer);
    Vec lg_u = U(kLogical), lg_s = S(kLogical);
    Vec cn_u = U(kCorrected), cn_s = S(kCorrected);
    Vec du_u = U(kUncorrectable), du_s = S(kUncorrectable);

    Vec notS = add(add(st_u, lg_u), add(cn_u, du_u));
    Vec s = add(add(st_s, lg_s), add(cn_s, du_s));
    Vec all = add(notS, s);
    Vec st = add(st_u, st_s);

    auto &c = t.coeffs;
    c["A"] = all;
    c["St"] = st;
    c["SlashedSt"] = sub(all, st);
    c["S"] = s;
    c["notS"] = notS;
    c["notS-St"] = st_u;
    c["S-St"] = st_s;
    c["notS-SlashedSt"] = sub(notS, st_u);
    c["S-SlashedSt"] = sub(s, st_s);
    c["notS-D"] = add(cn_u, du_u);
    c["S-D"] = add(cn_s, du_s);
    c["D"] = add(c["notS-D"], c["S-D"]);
    c["L"] = add(lg_u, lg_s);
    if (setting == Setting::kQec) {
        c["C"] = add(cn_u, cn_s);
        c["notC"] = add(c["L"], add(du_u, du_s));
        c["notS-notC"] = add(lg_u, du_u);
        c["S-notC"] = add(lg_s, du_s);
        c["notS-C"] = cn_u;
        c["S-C"] = cn_s;
        c["notC-D"] = add(du_u, du_s);
    } else {
        c["StL"] = add(st, c["L"]);
        c["notS-L"] = lg_u;
        c["S-L"] = lg_s;
        c["notS-StL"] = add(st_u, lg_u);
        c["S-StL"] = add(st_s, lg_s);
    }
    return t;
}

WepTable compute_weps(const StabilizerCode &code, const DecoderMap &decoder, const DecouplingGroup &dd,
                      unsigned threads) {
    PauliEnumerator e(code, &decoder);
    return make_table(code.k, Setting::kQec, e.count(dd, threads));
}

WepTable compute_qed_weps(const StabilizerCode &code, const DecouplingGroup &dd, unsigned threads) {
    PauliEnumerator e(code, nullptr);
    return make_table(code.k, Setting::kQed, e.count(dd, threads));
}

std::vector<std::string> check_wep_identities(const WepTable &t) {
    std::vector<std::string> out;
    auto tags = t.setting == Setting::kQec ? qec_tags() : qed_tags();
    for (auto tag : tags) {
        if (!t.has(tag)) {
            out.push_back("missing tag " + std::string(tag));
        } else if (t.at(tag).size() != t.n + 1) {
            out.push_back("tag " + std::string(tag) + " has " + std::to_string(t.at(tag).size()) +
                          " coefficients, expected " + std::to_string(t.n + 1));
        }
    }
    if (!out.empty()) {
        return out;
    }
    // Binomial(n, w) 3^w, built row by row.
    Vec expect(t.n + 1, 0);
    expect[0] = 1;
    for (size_t m = 1; m <= t.n; m++) {
        for (size_t w = m; w >= 1; w--) {
            expect[w] = expect[w] + 3 * expect[w - 1];
        }
    }
    if (t.at("A") != expect) {
        out.push_back("A != binomial(n,w) 3^w");
    }
    auto eq = [&](std::initializer_list<std::string_view> lhs, std::string_view rhs) {
        Vec sum(t.n + 1, 0);
        std::string name;
        for (auto tag : lhs) {
            sum = add(sum, t.at(tag));
            name += (name.empty() ? "" : " + ") + std::string(tag);
        }
        if (sum != t.at(rhs)) {
            out.push_back(name + " != " + std::string(rhs));
        }
    };
    eq({"notS", "S"}, "A");
    eq({"notS-St", "S-St"}, "St");
    eq({"St", "SlashedSt"}, "A");
    eq({"notS-D", "S-D"}, "D");
    if (t.setting == Setting::kQec) {
        eq({"notS-notC", "S-notC"}, "notC");
        eq({"notS-C", "S-C"}, "C");
        eq({"C", "notC", "St"}, "A");
        eq({"L", "notC-D"}, "notC");
        eq({"C", "notC-D"}, "D");
        eq({"notS-notC", "notS-C"}, "notS-SlashedSt");
        eq({"S-notC", "S-C"}, "S-SlashedSt");
        uint64_t ec = 0;
        for (size_t w = 0; w <= t.n; w++) {
            ec += t.at("C")[w] + t.at("St")[w];
        }
        if (2 * (t.n - t.k) < 64 && ec != uint64_t{1} << (2 * (t.n - t.k))) {
            out.push_back("sum of C + St is " + std::to_string(ec) + ", expected 4^(n-k)");
        }
    } else {
        eq({"notS-St", "notS-L"}, "notS-StL");
        eq({"S-St", "S-L"}, "S-StL");
        eq({"StL", "D"}, "A");
    }
    return out;
}

std::string wep_to_json(const WepTable &t) {
    nlohmann::ordered_json j;
    j["n"] = t.n;
    j["k"] = t.k;
    j["setting"] = std::string(setting_name(t.setting));
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (auto tag : t.setting == Setting::kQec ? qec_tags() : qed_tags()) {
        if (t.has(tag)) {
            coeffs[std::string(tag)] = t.at(tag);
        }
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump(2) + "\n";
}

WepTable wep_from_json(std::string_view text) {
    try {
        auto j = nlohmann::json::parse(text);
        WepTable t;
        t.n = j.at("n").get<size_t>();
        t.k = j.at("k").get<size_t>();
        auto s = j.at("setting").get<std::string>();
        if (s == "qec") {
            t.setting = Setting::kQec;
        } else if (s == "qed") {
            t.setting = Setting::kQed;
        } else {
            throw std::invalid_argument("unknown setting '" + s + "'");
        }
        for (auto &[tag, v] : j.at("coeffs").items()) {
            t.coeffs[tag] = v.get<std::vector<uint64_t>>();
        }
        return t;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("WEP JSON: ") + e.what());
    }
}

}  // namespace lddqec
