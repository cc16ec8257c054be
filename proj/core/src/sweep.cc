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

#include "lddqec/sweep.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <istream>
#include <sstream>
#include <thread>

namespace lddqec {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

double parse_double(std::string_view text) {
    std::string s(text);
    if (s.find('/') != std::string::npos) {
        try {
            return parse_rational(s).get_d();
        } catch (const std::exception &) {
            throw std::invalid_argument("not a number: '" + s + "'");
        }
    }
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return v;
}

void check_axis(const Axis &axis) {
    if (axis.points == 0) {
        throw std::invalid_argument("axis needs at least one point");
    }
    if (axis.points == 1 && axis.min != axis.max) {
        throw std::invalid_argument("a range axis needs at least 2 points");
    }
    if (axis.min > axis.max) {
        throw std::invalid_argument("axis min exceeds max");
    }
    if (axis.spacing == Spacing::kLog && !(axis.min > 0)) {
        throw std::invalid_argument("log axis needs min > 0");
    }
}

}  // namespace

std::vector<double> axis_values(const Axis &axis) {
    check_axis(axis);
    std::vector<double> v(axis.points);
    if (axis.points == 1) {
        v[0] = axis.min;
        return v;
    }
    const double last = static_cast<double>(axis.points - 1);
    for (size_t i = 0; i < axis.points; i++) {
        double t = static_cast<double>(i) / last;
        if (axis.spacing == Spacing::kLog) {
            v[i] = std::pow(10.0, std::log10(axis.min) + t * (std::log10(axis.max) - std::log10(axis.min)));
        } else {
            v[i] = axis.min + t * (axis.max - axis.min);
        }
    }
    v.front() = axis.min;
    v.back() = axis.max;
    return v;
}

Axis parse_axis(std::string_view text) {
    auto parts = split(text, ':');
    Axis a;
    if (parts.size() == 1) {
        a.min = a.max = parse_double(parts[0]);
        a.points = 1;
        return a;
    }
    if (parts.size() != 3 && parts.size() != 4) {
        throw std::invalid_argument("axis must be 'v', 'min:max:points' or 'min:max:points:log', got '" +
                                    std::string(text) + "'");
    }
    a.min = parse_double(parts[0]);
    a.max = parse_double(parts[1]);
    double pts = parse_double(parts[2]);
    if (pts < 1 || pts != std::floor(pts)) {
        throw std::invalid_argument("axis point count must be a positive integer");
    }
    a.points = static_cast<size_t>(pts);
    if (parts.size() == 4) {
        if (parts[3] == "log") {
            a.spacing = Spacing::kLog;
        } else if (parts[3] != "lin") {
            throw std::invalid_argument("axis spacing must be 'lin' or 'log'");
        }
    }
    check_axis(a);
    return a;
}

std::vector<Rational> axis_values_exact(const Axis &axis, std::string_view min_text, std::string_view max_text) {
    check_axis(axis);
    if (axis.spacing == Spacing::kLog) {
        std::vector<Rational> out;
        for (double v : axis_values(axis)) {
            out.push_back(rational_from_double(v));
        }
        return out;
    }
    Rational lo = parse_rational(min_text);
    Rational hi = parse_rational(max_text);
    if (axis.points == 1) {
        return {lo};
    }
    std::vector<Rational> out;
    Rational last(static_cast<long>(axis.points - 1));
    for (size_t i = 0; i < axis.points; i++) {
        out.push_back(lo + (hi - lo) * Rational(static_cast<long>(i)) / last);
    }
    return out;
}

std::string fidelity_csv_header() { return "strategy,p,p_dd,p_qec,p_qed,F,P_A"; }

std::string fidelity_csv_row(const FidelityReport<double> &r, const NoiseParams<double> &params) {
    std::ostringstream os;
    os << strategy_name(r.strategy) << ',' << format_double(params.p) << ',' << format_double(params.p_dd) << ','
       << format_double(params.p_qec) << ',' << format_double(params.p_qed) << ',' << format_double(r.fidelity)
       << ',';
    if (r.acceptance) {
        os << format_double(*r.acceptance);
    }
    return os.str();
}

std::string fidelity_csv_row(const FidelityReport<Rational> &r, const NoiseParams<Rational> &params) {
    std::ostringstream os;
    os << strategy_name(r.strategy) << ',' << format_rational(params.p) << ',' << format_rational(params.p_dd) << ','
       << format_rational(params.p_qec) << ',' << format_rational(params.p_qed) << ','
       << format_rational(r.fidelity) << ',';
    if (r.acceptance) {
        os << format_rational(*r.acceptance);
    }
    return os.str();
}

std::string_view comparator_name(Comparator c) {
    switch (c) {
        case Comparator::kDd:
            return "dd";
        case Comparator::kLdd:
            return "ldd";
        case Comparator::kQec:
            return "qec";
    }
    return "?";
}

Comparator parse_comparator(std::string_view name) {
    for (Comparator c : {Comparator::kDd, Comparator::kLdd, Comparator::kQec}) {
        if (comparator_name(c) == name) {
            return c;
        }
    }
    throw std::invalid_argument("comparator must be one of dd, ldd, qec (got '" + std::string(name) + "')");
}

Strategy comparator_strategy(Comparator c) {
    switch (c) {
        case Comparator::kDd:
            return Strategy::kDdPhys;
        case Comparator::kLdd:
            return Strategy::kLddOnly;
        case Comparator::kQec:
            return Strategy::kQecOnly;
    }
    return Strategy::kQecOnly;
}

std::vector<SweepPoint> sweep_relative_advantage(const WepTable &t, double p, const std::vector<double> &p_dd,
                                                 const std::vector<double> &p_qec, Comparator comparator) {
    Strategy comp = comparator_strategy(comparator);
    std::vector<SweepPoint> out;
    out.reserve(p_dd.size() * p_qec.size());
    for (double d : p_dd) {
        for (double q : p_qec) {
            NoiseParams<double> np{p, d, q, 0.0};
            check_domain(np);
            SweepPoint pt;
            pt.p = p;
            pt.p_dd = d;
            pt.p_qec = q;
            double eps_hyb = evaluate(t, Strategy::kHybrid, np).infidelity;
            double eps_comp = evaluate(t, comp, np).infidelity;
            pt.r = relative_advantage(eps_comp, eps_hyb);
            out.push_back(pt);
        }
    }
    return out;
}

std::string sweep_csv_header() { return "p,p_dd,p_qec,comparator,R,degenerate"; }

std::string sweep_csv_row(const SweepPoint &pt, Comparator comparator) {
    std::ostringstream os;
    os << format_double(pt.p) << ',' << format_double(pt.p_dd) << ',' << format_double(pt.p_qec) << ','
       << comparator_name(comparator) << ',' << format_double(pt.r.value) << ',' << (pt.r.degenerate ? 1 : 0);
    return os.str();
}

std::vector<ScanCandidate> dressing_candidates(const StabilizerCode &code) {
    if (code.k != 1) {
        throw std::invalid_argument("dressing scan enumerates k = 1 codes only; supply a candidate list for k = " +
                                    std::to_string(code.k));
    }
    const size_t r = code.num_checks();
    if (r > 16) {
        throw BudgetExceeded("dressing scan over 4^" + std::to_string(r) + " candidates exceeds the budget");
    }
    const uint64_t m = uint64_t{1} << r;
    std::vector<PauliOperator> elements;
    elements.reserve(m);
    for (uint64_t i = 0; i < m; i++) {
        elements.push_back(product_of(code.stabilizers, i));
    }
    std::vector<ScanCandidate> out;
    out.reserve(m * m);
    for (uint64_t i1 = 0; i1 < m; i1++) {
        PauliOperator gx = code.logical_x[0] * elements[i1];
        for (uint64_t i2 = 0; i2 < m; i2++) {
            PauliOperator gz = code.logical_z[0] * elements[i2];
            out.push_back({i1 * m + i2, DecouplingGroup(GeneratorSet(code.n, {gx, gz}))});
        }
    }
    return out;
}

std::vector<ScanCandidate> read_candidates(std::istream &in, size_t n, const std::string &source) {
    std::vector<ScanCandidate> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::string tok;
        GeneratorSet gens(n);
        try {
            while (ls >> tok) {
                PauliOperator g = parse_pauli(tok);
                if (g.num_qubits() != n) {
                    throw std::invalid_argument("generator '" + tok + "' has " + std::to_string(g.num_qubits()) +
                                                " qubits, expected " + std::to_string(n));
                }
                gens.push_back(g);
            }
            if (gens.empty()) {
                continue;
            }
            out.push_back({out.size(), DecouplingGroup(std::move(gens))});
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument(source + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) {
        throw std::invalid_argument(source + ": no candidates");
    }
    return out;
}

std::string group_id(const DecouplingGroup &g) {
    std::string s;
    for (const auto &p : g.generators()) {
        if (!s.empty()) {
            s += ' ';
        }
        s += format_pauli(p);
    }
    return s;
}

std::vector<ScanEntry> scan_ldd(const StabilizerCode &code, const DecoderMap &decoder,
                                const std::vector<ScanCandidate> &candidates, const NoiseParams<double> &params,
                                unsigned threads) {
    check_domain(params);
    PauliEnumerator en(code, &decoder);
    std::vector<ScanEntry> entries(candidates.size());
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(1, candidates.size())));
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned t) {
        try {
            for (size_t i = t; i < candidates.size(); i += threads) {
                const ScanCandidate &c = candidates[i];
                CategoryCounts counts = en.count_range(c.group, 0, en.total());
                WepTable table = make_table(code.k, Setting::kQec, counts);
                entries[i].index = c.index;
                entries[i].generators = group_id(c.group);
                entries[i].objective = evaluate(table, Strategy::kHybrid, params).infidelity;
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const ScanEntry &a, const ScanEntry &b) {
        return a.objective != b.objective ? a.objective < b.objective : a.index < b.index;
    });
    if (!entries.empty()) {
        double best = entries.front().objective;
        for (auto &e : entries) {
            e.tie = std::abs(e.objective - best) <= kTieTolerance * std::abs(best);
        }
    }
    return entries;
}

std::string scan_csv_header() { return "rank,index,generators,objective,tie"; }

std::string scan_csv_row(size_t rank, const ScanEntry &e) {
    std::ostringstream os;
    os << rank << ',' << e.index << ',' << e.generators << ',' << format_double(e.objective) << ','
       << (e.tie ? 1 : 0);
    return os.str();
}

}  // namespace lddqec
