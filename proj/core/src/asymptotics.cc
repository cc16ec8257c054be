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

#include "lddqec/asymptotics.h"

#include <cmath>
#include <limits>

#include "json.hpp"

namespace lddqec {

namespace {

// First index with a nonzero count, or nullopt.
std::optional<size_t> leading_index(const std::vector<uint64_t> &c) {
    for (size_t w = 0; w < c.size(); w++) {
        if (c[w] != 0) {
            return w;
        }
    }
    return std::nullopt;
}

Rational quarter_pow(size_t k) { return pow2(-2 * static_cast<long>(k)); }

Rational coeff_at(const WepTable &t, std::string_view tag, size_t w) {
    const auto &c = t.at(tag);
    return w < c.size() ? rational_from_u64(c[w]) : Rational(0);
}

bool same_group(const GeneratorSet &a, const GeneratorSet &b) {
    F2Basis ba(a);
    F2Basis bb(b);
    for (const auto &p : a) {
        if (!bb.reduce(p)) {
            return false;
        }
    }
    for (const auto &p : b) {
        if (!ba.reduce(p)) {
            return false;
        }
    }
    return true;
}

struct WeightAlphaScan {
    bool any_detected = false;
    bool any_undetected = false;
    std::optional<PauliOperator> first_detected;  // smallest enumeration index
};

WeightAlphaScan scan_uncorrectables(const StabilizerCode &code, const DecoderMap &decoder, size_t alpha) {
    WeightAlphaScan out;
    uint64_t best = std::numeric_limits<uint64_t>::max();
    const uint64_t want = 0;
    for_each_pauli_of_weight(code.n, alpha, [&](uint64_t x, uint64_t z) {
        PauliOperator e(code.n, x, z);
        Syndrome s = syndrome(code, e);
        uint64_t label = logical_label(code, e) ^ logical_label(code, decoder[s]);
        if (label == want) {
            return;
        }
        if (s == 0) {
            out.any_undetected = true;
            return;
        }
        out.any_detected = true;
        uint64_t idx = enumeration_index(e);
        if (idx < best) {
            best = idx;
            out.first_detected = e;
        }
    });
    return out;
}

bool hybrid_beats_qec(const WepTable &t, const Rational &p, const Rational &p_dd) {
    NoiseParams<Rational> np{p, p_dd, Rational(0), Rational(0)};
    return f_hybrid(t, np) > f_qec(t, np);
}

}  // namespace

QecAsymptotics qec_asymptotics(const WepTable &t) {
    const auto &not_c = t.at("notC");
    auto lead = leading_index(not_c);
    if (!lead) {
        throw InconsistentInput("notC is identically zero; no uncorrectable error exists");
    }
    QecAsymptotics out;
    out.alpha = *lead;
    out.a_count = not_c[*lead];
    out.b_qec = coeff_at(t, "C", 1) - quarter_pow(t.k) * coeff_at(t, "D", 1);
    return out;
}

SuppressedAsymptotics suppressed_asymptotics(const WepTable &t) {
    const auto &s_nc = t.at("S-notC");
    auto lead = leading_index(s_nc);
    if (!lead) {
        throw InconsistentInput("S-notC is identically zero; a nontrivial group always suppresses some "
                                "uncorrectable error");
    }
    return {*lead, s_nc[*lead]};
}

WeightOneCounts weight_one_counts(const StabilizerCode &code, const DecouplingGroup &dd) {
    WeightOneCounts c;
    for_each_pauli_of_weight(code.n, 1, [&](uint64_t x, uint64_t z) {
        PauliOperator e(code.n, x, z);
        bool zero = syndrome(code, e) == 0;
        bool stab = zero && logical_label(code, e) == 0;
        c.zero_syndrome += zero;
        c.stabilizers += stab;
        if (!dd.suppresses(e)) {
            c.unsuppressed_not_stabilizer += !stab;
            c.unsuppressed_nonzero_syndrome += !zero;
        }
    });
    return c;
}

LddCoeffs ldd_linear_coeffs(const StabilizerCode &code, const DecouplingGroup &dd) {
    WeightOneCounts c = weight_one_counts(code, dd);
    Rational q4 = quarter_pow(code.k);
    Rational three_n = rational_from_u64(3 * code.n);
    LddCoeffs out;
    out.a = rational_from_u64(c.unsuppressed_not_stabilizer) - q4 * rational_from_u64(c.unsuppressed_nonzero_syndrome);
    out.b = (three_n - rational_from_u64(c.stabilizers)) - q4 * (three_n - rational_from_u64(c.zero_syndrome));
    if (c.zero_syndrome == c.stabilizers) {
        Rational fa = (1 - q4) * rational_from_u64(c.unsuppressed_not_stabilizer);
        Rational fb = (1 - q4) * (three_n - rational_from_u64(c.stabilizers));
        if (fa != out.a || fb != out.b) {
            throw std::logic_error("ldd_linear_coeffs: factored forms disagree");
        }
    }
    return out;
}

SuppressionCriteria suppression_criteria(const StabilizerCode &code, const DecoderMap &decoder,
                                         const DecouplingGroup &dd, const WepTable &wep) {
    SuppressionCriteria r;
    r.alpha = qec_asymptotics(wep).alpha;
    r.beta = suppressed_asymptotics(wep).beta;
    r.equal_weights = r.beta == r.alpha;

    WeightAlphaScan scan = scan_uncorrectables(code, decoder, r.alpha);
    r.any_weight_alpha_detected = scan.any_detected;
    r.all_weight_alpha_detected = !scan.any_undetected;
    r.dressable = r.beta > r.alpha && scan.any_detected;

    if (code.k > 0) {
        r.distance = code_distance(code);
        if (*r.distance >= 2) {
            r.distance_bound_applicable = true;
            r.distance_bound_holds = r.alpha <= (*r.distance + 1) / 2 && r.all_weight_alpha_detected;
        }
        if (r.beta > r.alpha && same_group(dd.generators(), logical_group(code).generators())) {
            r.logical_group_applicable = true;
            r.logical_group_holds = scan.any_detected;
        }
    }
    return r;
}

std::optional<Dressing> find_dressing(const StabilizerCode &code, const DecoderMap &decoder,
                                      const DecouplingGroup &dd, const WepTable &wep, unsigned threads) {
    size_t alpha = qec_asymptotics(wep).alpha;
    size_t beta = suppressed_asymptotics(wep).beta;
    if (beta <= alpha) {
        throw std::invalid_argument("find_dressing: needs beta > alpha (got alpha=" + std::to_string(alpha) +
                                    ", beta=" + std::to_string(beta) + ")");
    }
    WeightAlphaScan scan = scan_uncorrectables(code, decoder, alpha);
    if (!scan.first_detected) {
        return std::nullopt;
    }
    const PauliOperator &e = *scan.first_detected;
    Syndrome s = syndrome(code, e);
    size_t bit = static_cast<size_t>(std::countr_zero(s));

    const GeneratorSet &gens = dd.generators();
    std::optional<size_t> g;
    for (size_t i = 0; i < gens.size(); i++) {
        if (commutes(gens[i], e)) {
            g = i;
            break;
        }
    }
    if (!g) {
        // e would be suppressed, contradicting beta > alpha.
        throw InconsistentInput("find_dressing: weight-alpha error anticommutes with every generator");
    }
    Dressing out;
    out.error = e;
    out.stabilizer = code.stabilizers[bit];
    out.generator_index = *g;
    out.group = dress_generator(dd, *g, out.stabilizer);
    out.beta_after = suppressed_asymptotics(compute_weps(code, decoder, out.group, threads)).beta;
    return out;
}

std::vector<Rational> series_infidelity(const WepTable &t, Strategy s, const Rational &p_dd, const Rational &p_qec,
                                        size_t order, const Rational &p_qed) {
    if (order > t.n) {
        throw std::invalid_argument("series_infidelity: order exceeds n");
    }
    ClosedForm<Rational> f = closed_form<Rational>(t, s, p_dd, p_qec, p_qed);
    return series_divide(f.infid_num, f.infid_den, order);
}

AffineSeries series_affine_in_p_dd(const WepTable &t, Strategy s, const Rational &p_qec, size_t order) {
    auto at0 = series_infidelity(t, s, Rational(0), p_qec, order);
    auto at1 = series_infidelity(t, s, Rational(1), p_qec, order);
    auto mid = series_infidelity(t, s, Rational(1, 2), p_qec, order);
    AffineSeries out;
    for (size_t i = 0; i <= order; i++) {
        out.intercept.push_back(at0[i]);
        out.slope.push_back(at1[i] - at0[i]);
        if (mid[i] != at0[i] + out.slope[i] / 2) {
            out.affine = false;
        }
    }
    return out;
}

QedAsymptotics qed_asymptotics(const WepTable &qed) {
    if (qed.setting != Setting::kQed) {
        throw std::invalid_argument("qed_asymptotics: needs a QED table");
    }
    auto lead = leading_index(qed.at("L"));
    if (!lead || *lead < 2) {
        throw std::invalid_argument("qed_asymptotics: needs code distance d >= 2");
    }
    QedAsymptotics out;
    out.d = *lead;
    out.qed_a = qed.at("L")[*lead];
    Rational w1 = coeff_at(qed, "St", 1);
    Rational three_n = rational_from_u64(3 * qed.n);
    Rational c2 = pow2(static_cast<long>(qed.k) - static_cast<long>(qed.n));
    out.linear_coeff = (1 - quarter_pow(qed.k)) * c2 * (three_n - w1);
    out.reject_constant = 1 - c2;
    out.reject_linear = three_n - w1;
    return out;
}

QedSeriesTerms qed_series_terms(const WepTable &qed, size_t d) {
    using D = Dual<Rational>;
    ClosedForm<D> f = closed_form<D>(qed, Strategy::kQedOnly, D(Rational(1)), D(Rational(0)),
                                     D(Rational(0), Rational(1)));
    size_t order = std::max<size_t>(d, 1);
    auto infid = series_divide(f.infid_num, f.infid_den, order);
    // 1 - P_A = (A - Q) / A.
    auto accept = series_divide(f.accept_den - f.accept_num, f.accept_den, 1);
    QedSeriesTerms out;
    out.leading = infid[d].re;
    out.linear_coeff = infid[1].eps;
    out.reject_constant = accept[0].eps;
    out.reject_linear = accept[1].re;
    return out;
}

ThresholdSearch find_advantage_threshold(const WepTable &t, const Rational &p_dd, double z_min, double p_max) {
    if (!(z_min > 0) || !(p_max > 0 && p_max < 1)) {
        throw std::domain_error("find_advantage_threshold: need z_min > 0 and p_max in (0,1)");
    }
    auto p_of_z = [](double z) { return 3 * z / (1 + 3 * z); };
    const double step = std::pow(10.0, 0.125);
    ThresholdSearch out;
    double good = 0;
    double bad = 0;
    for (double z = z_min;; z *= step) {
        double p = std::min(p_of_z(z), p_max);
        out.grid_points++;
        if (!hybrid_beats_qec(t, Rational(p), p_dd)) {
            bad = p;
            break;
        }
        good = p;
        if (p >= p_max) {
            break;
        }
    }
    out.certified = good > 0;
    if (!out.certified) {
        return out;
    }
    if (bad == 0) {
        out.holds_everywhere = true;
        out.p0 = good;
        return out;
    }
    for (int it = 0; it < 60 && bad - good > 1e-15 * bad; it++) {
        double mid = std::sqrt(good * bad);
        if (hybrid_beats_qec(t, Rational(mid), p_dd)) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    out.p0 = good;
    return out;
}

AsymptoticsReport build_asymptotics_report(const StabilizerCode &code, const DecoderMap &decoder,
                                           const DecouplingGroup &dd, unsigned threads) {
    WepTable wep = compute_weps(code, decoder, dd, threads);
    AsymptoticsReport r;
    r.n = code.n;
    r.k = code.k;
    r.qec = qec_asymptotics(wep);
    r.suppressed = suppressed_asymptotics(wep);
    r.ldd = ldd_linear_coeffs(code, dd);
    r.weight_one = weight_one_counts(code, dd);
    r.criteria = suppression_criteria(code, decoder, dd, wep);
    WepTable qed = compute_qed_weps(code, dd, threads);
    auto lead = leading_index(qed.at("L"));
    if (lead && *lead >= 2) {
        r.qed = qed_asymptotics(qed);
    }
    return r;
}

std::string asymptotics_to_json(const AsymptoticsReport &r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["alpha"] = r.qec.alpha;
    j["a_count"] = r.qec.a_count;
    j["beta"] = r.suppressed.beta;
    j["B_count"] = r.suppressed.b_count;
    j["b_qec"] = format_rational(r.qec.b_qec);
    j["ldd_a"] = format_rational(r.ldd.a);
    j["ldd_b"] = format_rational(r.ldd.b);
    j["criterion_part1"] = r.criteria.equal_weights;
    j["dressing_available"] = r.criteria.dressable;
    if (r.qed) {
        j["qed_d"] = r.qed->d;
        j["qed_a"] = r.qed->qed_a;
        j["qed_linear_coeff"] = format_rational(r.qed->linear_coeff);
        j["qed_reject_constant"] = format_rational(r.qed->reject_constant);
        j["qed_reject_linear"] = format_rational(r.qed->reject_linear);
    } else {
        j["qed_d"] = nullptr;
        j["qed_a"] = nullptr;
        j["qed_linear_coeff"] = nullptr;
    }
    ordered_json w1;
    w1["stabilizers"] = r.weight_one.stabilizers;
    w1["zero_syndrome"] = r.weight_one.zero_syndrome;
    w1["unsuppressed_not_stabilizer"] = r.weight_one.unsuppressed_not_stabilizer;
    w1["unsuppressed_nonzero_syndrome"] = r.weight_one.unsuppressed_nonzero_syndrome;
    j["weight_one"] = w1;
    ordered_json crit;
    crit["equal_weights"] = r.criteria.equal_weights;
    crit["dressable"] = r.criteria.dressable;
    crit["distance"] = r.criteria.distance ? ordered_json(*r.criteria.distance) : ordered_json(nullptr);
    crit["distance_bound_applicable"] = r.criteria.distance_bound_applicable;
    crit["distance_bound_holds"] = r.criteria.distance_bound_holds;
    crit["logical_group_applicable"] = r.criteria.logical_group_applicable;
    crit["logical_group_holds"] = r.criteria.logical_group_holds;
    j["criteria"] = crit;
    return j.dump(2) + "\n";
}

}  // namespace lddqec
