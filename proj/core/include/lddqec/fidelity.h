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

#ifndef LDDQEC_FIDELITY_H
#define LDDQEC_FIDELITY_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lddqec/poly.h"
#include "lddqec/rational.h"
#include "lddqec/wep.h"

namespace lddqec {

enum class Strategy { kDdPhys, kQecOnly, kLddOnly, kHybrid, kQedOnly, kQedHybrid, kQedLddOnly };

std::string_view strategy_name(Strategy s);
/// Throws std::invalid_argument listing the accepted names.
Strategy parse_strategy(std::string_view name);
bool is_qed(Strategy s);
/// Setting of the WEP table a strategy reads. dd_phys reads none and reports kQec.
Setting required_setting(Strategy s);
std::span<const Strategy> all_strategies();

/// Noise parameters. z is derived from p on demand.
template <typename T>
struct NoiseParams {
    T p{};
    T p_dd = T(1);
    T p_qec{};
    T p_qed{};

    T z() const { return z_of_p(p); }
};

/// Throws std::domain_error naming the first parameter outside its domain.
void check_domain(const NoiseParams<double> &params);
void check_domain(const NoiseParams<Rational> &params);

/// A strategy's closed form as polynomials in z:
///   1 - F = infid_num / infid_den and, for postselected strategies, P_A = accept_num / accept_den.
template <typename T>
struct ClosedForm {
    Poly<T> infid_num;
    Poly<T> infid_den;
    bool has_acceptance = false;
    Poly<T> accept_num;
    Poly<T> accept_den;
};

namespace detail {

template <typename T>
Poly<T> tag(const WepTable &t, std::string_view name) {
    return Poly<T>::from_counts(t.at(name));
}

template <typename T>
Poly<T> one() {
    return Poly<T>::constant(T(1));
}

// (1 + 3z)^k.
template <typename T>
Poly<T> all_weight(size_t k) {
    Poly<T> base(std::vector<T>{T(1), T(3)});
    Poly<T> out = one<T>();
    for (size_t i = 0; i < k; i++) {
        out = out * base;
    }
    return out;
}

template <typename T>
void require_setting(const WepTable &t, Setting s, Strategy strategy) {
    if (t.setting != s) {
        throw std::invalid_argument("strategy " + std::string(strategy_name(strategy)) + " needs a " +
                                    std::string(setting_name(s)) + " WEP table, got " +
                                    std::string(setting_name(t.setting)));
    }
}

}  // namespace detail

/// Builds the closed form of a strategy. QEC strategies need a QEC table, QED strategies a
/// QED table; ldd_only and dd_phys accept either. Throws std::out_of_range on missing tags.
template <typename T>
ClosedForm<T> closed_form(const WepTable &t, Strategy s, const T &p_dd, const T &p_qec, const T &p_qed) {
    using detail::tag;
    const T q4 = Num<T>::from(pow2(-2 * static_cast<long>(t.k)));
    const T c2 = Num<T>::from(pow2(static_cast<long>(t.k) - static_cast<long>(t.n)));
    const T one(1);
    ClosedForm<T> f;
    switch (s) {
        case Strategy::kDdPhys: {
            Poly<T> excess = detail::all_weight<T>(t.k) - detail::one<T>();
            f.infid_num = p_dd * excess;
            f.infid_den = detail::one<T>() + p_dd * excess;
            break;
        }
        case Strategy::kHybrid: {
            detail::require_setting<T>(t, Setting::kQec, s);
            f.infid_num = tag<T>(t, "notS-notC") + p_qec * (tag<T>(t, "notS-C") - q4 * tag<T>(t, "notS-D")) +
                          p_dd * (tag<T>(t, "S-notC") + p_qec * (tag<T>(t, "S-C") - q4 * tag<T>(t, "S-D")));
            f.infid_den = tag<T>(t, "notS") + p_dd * tag<T>(t, "S");
            break;
        }
        case Strategy::kQecOnly: {
            detail::require_setting<T>(t, Setting::kQec, s);
            f.infid_num = tag<T>(t, "notC") + p_qec * (tag<T>(t, "C") - q4 * tag<T>(t, "D"));
            f.infid_den = tag<T>(t, "A");
            break;
        }
        case Strategy::kLddOnly:
        case Strategy::kQedLddOnly: {
            if (s == Strategy::kQedLddOnly) {
                detail::require_setting<T>(t, Setting::kQed, s);
            }
            f.infid_num = (tag<T>(t, "notS-SlashedSt") - q4 * tag<T>(t, "notS-D")) +
                          p_dd * (tag<T>(t, "S-SlashedSt") - q4 * tag<T>(t, "S-D"));
            f.infid_den = tag<T>(t, "notS") + p_dd * tag<T>(t, "S");
            if (s == Strategy::kQedLddOnly) {
                f.has_acceptance = true;
                f.accept_num = detail::one<T>();
                f.accept_den = detail::one<T>();
            }
            break;
        }
        case Strategy::kQedHybrid: {
            detail::require_setting<T>(t, Setting::kQed, s);
            Poly<T> total = tag<T>(t, "notS") + p_dd * tag<T>(t, "S");
            Poly<T> q = (one - p_qed) * (tag<T>(t, "notS-StL") + p_dd * tag<T>(t, "S-StL")) + (c2 * p_qed) * total;
            f.infid_num = (one - p_qed * (one - c2)) * (tag<T>(t, "notS-L") + p_dd * tag<T>(t, "S-L")) +
                          ((one - q4) * c2 * p_qed) * (tag<T>(t, "notS-D") + p_dd * tag<T>(t, "S-D"));
            f.infid_den = q;
            f.has_acceptance = true;
            f.accept_num = q;
            f.accept_den = total;
            break;
        }
        case Strategy::kQedOnly: {
            detail::require_setting<T>(t, Setting::kQed, s);
            Poly<T> q = (one - p_qed) * tag<T>(t, "StL") + (c2 * p_qed) * tag<T>(t, "A");
            f.infid_num = (one - p_qed * (one - c2)) * tag<T>(t, "L") + ((one - q4) * c2 * p_qed) * tag<T>(t, "D");
            f.infid_den = q;
            f.has_acceptance = true;
            f.accept_num = q;
            f.accept_den = tag<T>(t, "A");
            break;
        }
    }
    return f;
}

/// Evaluated strategy at one parameter point.
template <typename T>
struct FidelityReport {
    Strategy strategy{};
    T infidelity{};
    T fidelity{};
    std::optional<T> acceptance;
    std::optional<T> q;  // acceptance weight Q for the postselected strategies
};

template <typename T>
FidelityReport<T> evaluate(const WepTable &t, Strategy s, const NoiseParams<T> &params) {
    ClosedForm<T> f = closed_form<T>(t, s, params.p_dd, params.p_qec, params.p_qed);
    T z = params.z();
    FidelityReport<T> r;
    r.strategy = s;
    T den = eval_poly(f.infid_den, z);
    if (den == T(0)) {
        throw std::domain_error(std::string(strategy_name(s)) + ": acceptance impossible (Q = 0)");
    }
    r.infidelity = T(eval_poly(f.infid_num, z) / den);
    r.fidelity = T(T(1) - r.infidelity);
    if (f.has_acceptance) {
        r.acceptance = T(eval_poly(f.accept_num, z) / eval_poly(f.accept_den, z));
        if (s != Strategy::kQedLddOnly) {
            r.q = den;
        }
    }
    return r;
}

/// (1-p)^k / ((1-p)^k + p_dd (1 - (1-p)^k)).
template <typename T>
T f_dd_closed(const T &p, const T &p_dd, size_t k) {
    if (!(p >= T(0) && p < T(1)) || !(p_dd >= T(0) && p_dd <= T(1)) || k < 1) {
        throw std::domain_error("f_dd_closed: need p in [0,1), p_dd in [0,1], k >= 1");
    }
    T a(1);
    for (size_t i = 0; i < k; i++) {
        a *= T(T(1) - p);
    }
    return T(a / (a + p_dd * (T(1) - a)));
}

/// (notS-St + p_dd S-St) / (notS + p_dd S).
template <typename T>
T f_dd_general(const WepTable &t, const NoiseParams<T> &params) {
    using detail::tag;
    T z = params.z();
    T num = eval_poly(tag<T>(t, "notS-St") + params.p_dd * tag<T>(t, "S-St"), z);
    T den = eval_poly(tag<T>(t, "notS") + params.p_dd * tag<T>(t, "S"), z);
    return T(num / den);
}

template <typename T>
T f_hybrid(const WepTable &t, const NoiseParams<T> &params) {
    return evaluate(t, Strategy::kHybrid, params).fidelity;
}

template <typename T>
T f_qec(const WepTable &t, const NoiseParams<T> &params) {
    return evaluate(t, Strategy::kQecOnly, params).fidelity;
}

template <typename T>
T f_ldd(const WepTable &t, const NoiseParams<T> &params) {
    return evaluate(t, Strategy::kLddOnly, params).fidelity;
}

template <typename T>
FidelityReport<T> qed_hybrid(const WepTable &t, const NoiseParams<T> &params) {
    return evaluate(t, Strategy::kQedHybrid, params);
}

template <typename T>
FidelityReport<T> qed_only(const WepTable &t, const NoiseParams<T> &params) {
    return evaluate(t, Strategy::kQedOnly, params);
}

template <typename T>
FidelityReport<T> qed_ldd_only(const WepTable &t, const NoiseParams<T> &params) {
    return evaluate(t, Strategy::kQedLddOnly, params);
}

/// QEC-only infidelity summed branch by branch:
/// [L + (1 - p_qec) notC-D + p_qec (1 - 4^-k)(C + notC-D)] / A.
template <typename T>
T qec_infidelity_by_branches(const WepTable &t, const NoiseParams<T> &params) {
    using detail::tag;
    const T q4 = Num<T>::from(pow2(-2 * static_cast<long>(t.k)));
    const T one(1);
    T z = params.z();
    Poly<T> num = tag<T>(t, "L") + (one - params.p_qec) * tag<T>(t, "notC-D") +
                  (params.p_qec * (one - q4)) * (tag<T>(t, "C") + tag<T>(t, "notC-D"));
    return T(eval_poly(num, z) / eval_poly(tag<T>(t, "A"), z));
}

/// Compares f(t) = (a + t b) / (c + t d) at t and at 1. Requires c, d > 0 and t in [0, 1).
template <typename T>
bool fraction_compare(const T &a, const T &b, const T &c, const T &d, const T &t) {
    if (!(c > T(0)) || !(d > T(0)) || !(t >= T(0) && t < T(1))) {
        throw std::domain_error("fraction_compare: need C > 0, D > 0, t in [0,1)");
    }
    T ft = T((a + t * b) / (c + t * d));
    T f1 = T((a + b) / (c + d));
    return ft > f1;
}

template <typename T>
struct HybVsQecCriterion {
    T suppressed_ratio{};    // S-notC / S
    T unsuppressed_ratio{};  // notS-notC / notS
    bool hybrid_wins = false;
};

/// At p_qec = 0 and any p_dd in [0,1): F_hyb > F_qec iff S-notC/S > notS-notC/notS.
template <typename T>
HybVsQecCriterion<T> hyb_vs_qec_criterion(const WepTable &t, const T &z) {
    using detail::tag;
    if (!(z > T(0))) {
        throw std::domain_error("hyb_vs_qec_criterion: need z > 0");
    }
    T s = eval_poly(tag<T>(t, "S"), z);
    T ns = eval_poly(tag<T>(t, "notS"), z);
    if (!(s > T(0)) || !(ns > T(0))) {
        throw std::domain_error("hyb_vs_qec_criterion: degenerate S or notS");
    }
    T s_nc = eval_poly(tag<T>(t, "S-notC"), z);
    T ns_nc = eval_poly(tag<T>(t, "notS-notC"), z);
    HybVsQecCriterion<T> out;
    out.suppressed_ratio = T(s_nc / s);
    out.unsuppressed_ratio = T(ns_nc / ns);
    out.hybrid_wins = s_nc * ns > ns_nc * s;
    return out;
}

struct QedCriterion {
    bool fidelity_ok = false;         // F_HybD >= F_QED
    bool fidelity_strict = false;     // F_HybD >  F_QED
    bool partial_order_ok = false;    // (F_HybD, P_A,Hyb) dominates (F_QED, P_A,QED)
    bool partial_order_strict = false;
};

/// Verdicts at p_qed = 0 for any p_dd in [0,1), from the WEP ratios alone.
template <typename T>
QedCriterion qed_criterion(const WepTable &t, const T &z) {
    using detail::tag;
    if (!(z > T(0))) {
        throw std::domain_error("qed_criterion: need z > 0");
    }
    const T q4 = Num<T>::from(pow2(-2 * static_cast<long>(t.k)));
    T ns = eval_poly(tag<T>(t, "notS"), z);
    T s = eval_poly(tag<T>(t, "S"), z);
    T ns_l = eval_poly(tag<T>(t, "notS-L"), z);
    T s_l = eval_poly(tag<T>(t, "S-L"), z);
    T ns_stl = eval_poly(tag<T>(t, "notS-StL"), z);
    T s_stl = eval_poly(tag<T>(t, "S-StL"), z);
    T ns_st = eval_poly(tag<T>(t, "notS-St"), z);
    T s_st = eval_poly(tag<T>(t, "S-St"), z);
    if (!(s > T(0)) || !(s_stl > T(0))) {
        throw std::domain_error("qed_criterion: degenerate S or S-StL");
    }
    // ns_l / ns_stl <= s_l / s_stl, denominators positive.
    T lhs = ns_l * s_stl;
    T rhs = s_l * ns_stl;
    QedCriterion out;
    out.fidelity_ok = lhs <= rhs;
    out.fidelity_strict = lhs < rhs;
    T a = T((ns_st - q4 * ns_stl) * s);
    T b = T((s_st - q4 * s_stl) * ns);
    out.partial_order_ok = out.fidelity_ok && a >= b;
    out.partial_order_strict = out.fidelity_strict && a > b;
    return out;
}

/// (F1, PA1) dominates (F2, PA2): F1 >= F2 and PA1 (F1 - 4^-k) >= PA2 (F2 - 4^-k).
template <typename T>
bool dominates(const T &f1, const T &pa1, const T &f2, const T &pa2, size_t k) {
    const T q4 = Num<T>::from(pow2(-2 * static_cast<long>(k)));
    return f1 >= f2 && pa1 * (f1 - q4) >= pa2 * (f2 - q4);
}

struct RelativeAdvantage {
    double value = 0.0;
    /// Set when an infidelity was not positive; value is then +-infinity or NaN.
    bool degenerate = false;
};

/// log10(eps_comp / eps_hyb); positive means the hybrid is better.
RelativeAdvantage relative_advantage(double eps_comp, double eps_hyb);

}  // namespace lddqec

#endif  // LDDQEC_FIDELITY_H
